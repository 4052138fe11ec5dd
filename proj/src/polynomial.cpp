#include "drz/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace drz {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::power(std::size_t k) {
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = 1;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return (1 / coeffs_.back()) * *this;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Matrix Polynomial::eval(const Matrix& a) const {
    if (!a.is_square()) throw DimensionMismatch("polynomial of non-square matrix");
    Matrix acc = Matrix::zero(a.rows(), a.rows());
    Matrix id = Matrix::identity(a.rows());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a + *it * id;
    return acc;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> c(std::max(p.coeffs().size(), q.coeffs().size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) + q.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> c(std::max(p.coeffs().size(), q.coeffs().size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) - q.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial::zero();
    std::vector<Rational> c(p.coeffs().size() + q.coeffs().size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeff(i) == 0) continue;
        for (std::size_t j = 0; j < q.coeffs().size(); ++j) c[i + j] += p.coeff(i) * q.coeff(j);
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> c = p.coeffs();
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& p, const Polynomial& div) {
    if (div.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> rem = p.coeffs();
    long dd = div.degree();
    if (p.degree() < dd) return {Polynomial::zero(), p};
    std::vector<Rational> quot(p.degree() - dd + 1, Rational(0));
    Rational lead_inv = 1 / div.leading();
    for (long k = p.degree() - dd; k >= 0; --k) {
        Rational f = rem[k + dd] * lead_inv;
        quot[k] = f;
        if (f == 0) continue;
        for (long j = 0; j <= dd; ++j) rem[k + j] -= f * div.coeff(j);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool divides(const Polynomial& q, const Polynomial& p) {
    if (q.is_zero()) return p.is_zero();
    return poly_divmod(p, q).second.is_zero();
}

std::pair<Polynomial, Polynomial> poly_gcd_lcm(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("gcd/lcm of two zero polynomials");
    Polynomial a = p.monic(), b = q.monic();
    while (!b.is_zero()) {
        Polynomial r = poly_divmod(a, b).second;
        a = b;
        b = r.monic();
    }
    Polynomial g = a.monic();
    Polynomial l;
    if (p.is_zero() || q.is_zero())
        l = Polynomial::zero();
    else
        l = poly_divmod(p * q, g).first.monic();
    return {g, l};
}

Polynomial min_poly(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("minimal polynomial of non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return Polynomial::constant(1);

    // Vectorized powers become columns; stop at the first power that is a
    // linear combination of the previous ones and read the coefficients off.
    std::vector<Matrix> powers{Matrix::identity(n)};
    for (std::size_t d = 1; d <= n; ++d) {
        powers.push_back(powers.back() * a);
        Matrix sys(n * n, d + 1);
        for (std::size_t c = 0; c <= d; ++c)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) sys(i * n + j, c) = powers[c](i, j);
        Matrix ker = null_space_basis(sys);
        if (ker.cols() == 0) continue;
        // Dependence involving A^d exists; by minimality of d the last
        // coordinate of the kernel vector is nonzero.
        std::vector<Rational> coeffs(d + 1);
        Rational scale = 1 / ker(d, 0);
        for (std::size_t c = 0; c <= d; ++c) coeffs[c] = ker(c, 0) * scale;
        return Polynomial(std::move(coeffs));
    }
    throw std::logic_error("dependence among matrix powers must appear by degree n");
}

std::pair<std::size_t, Polynomial> split_lambda_power(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("lambda-power split of the zero polynomial");
    std::size_t k = 0;
    while (p.coeff(k) == 0) ++k;
    std::vector<Rational> rest(p.coeffs().begin() + k, p.coeffs().end());
    return {k, Polynomial(std::move(rest))};
}

std::pair<std::size_t, Polynomial> strip_root(const Polynomial& p, const Rational& root) {
    if (p.is_zero()) throw std::invalid_argument("root stripping of the zero polynomial");
    Polynomial factor(std::vector<Rational>{-root, Rational(1)});
    Polynomial cur = p;
    std::size_t e = 0;
    while (true) {
        auto [q, r] = poly_divmod(cur, factor);
        if (!r.is_zero()) break;
        cur = q;
        ++e;
    }
    return {e, cur};
}

namespace {

std::string term_string(const Rational& c, std::size_t deg) {
    std::string mag = to_string(abs(c));
    std::string coeff;
    if (deg == 0)
        coeff = mag;
    else if (mag == "1")
        coeff = "";
    else if (mag.find('/') != std::string::npos)
        coeff = "(" + mag + ")";
    else
        coeff = mag;
    if (deg == 0) return coeff;
    std::string var = deg == 1 ? "l" : "l^" + std::to_string(deg);
    return coeff + var;
}

}  // namespace

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long d = p.degree(); d >= 0; --d) {
        Rational c = p.coeff(d);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << term_string(c, static_cast<std::size_t>(d));
    }
    return os.str();
}

std::string factored_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    auto [k, f] = split_lambda_power(p);
    std::string body = "(" + to_string(f) + ")";
    if (k == 0) return f.degree() == 0 ? to_string(f) : body;
    std::string head = k == 1 ? "l" : "l^" + std::to_string(k);
    if (f.degree() == 0 && f.coeff(0) == 1) return head;
    return head + " * " + body;
}

}  // namespace drz
