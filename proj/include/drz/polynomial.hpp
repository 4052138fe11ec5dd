#ifndef DRZ_POLYNOMIAL_HPP
#define DRZ_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "drz/matrix.hpp"
#include "drz/rational.hpp"

namespace drz {

/// Univariate polynomial over the rationals, coefficients in ascending degree,
/// no trailing zeros (the zero polynomial has an empty coefficient array).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& c);
    /// lambda^k
    static Polynomial power(std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    /// degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    Polynomial monic() const;
    Rational eval(const Rational& x) const;
    /// p(A) for square A, evaluated by Horner.
    Matrix eval(const Matrix& a) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Rational& s, const Polynomial& p);

/// Exact Euclidean division: p = q * div + rem with deg(rem) < deg(div).
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& p, const Polynomial& div);

/// True when q divides p exactly.
bool divides(const Polynomial& q, const Polynomial& p);

/// Monic gcd and monic lcm; throws std::invalid_argument when both are zero.
std::pair<Polynomial, Polynomial> poly_gcd_lcm(const Polynomial& p, const Polynomial& q);

/// Minimal polynomial: the least-degree monic p with p(A) = 0, found by an
/// exact linear-dependence search over vectorized powers I, A, A^2, ...
/// The 0x0 matrix gets the unit polynomial.
Polynomial min_poly(const Matrix& a);

/// p = lambda^k * f with f(0) != 0; throws std::invalid_argument on the zero
/// polynomial. When p is a minimal polynomial, k is the Drazin index.
std::pair<std::size_t, Polynomial> split_lambda_power(const Polynomial& p);

/// Largest e with (lambda - root)^e dividing p, plus the cofactor.
std::pair<std::size_t, Polynomial> strip_root(const Polynomial& p, const Rational& root);

/// Expanded human form, e.g. "l^2 + 4l + 4"; variable letter is 'l'.
std::string to_string(const Polynomial& p);

/// Factored display "l^k * (cofactor)" used by the CLI.
std::string factored_string(const Polynomial& p);

}  // namespace drz

#endif
