#ifndef DRZ_MATRIX_HPP
#define DRZ_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "drz/errors.hpp"
#include "drz/rational.hpp"

namespace drz {

/// Dense rectangular matrix over exact rationals, row-major. Matrices are
/// immutable values in spirit: every operation returns a fresh matrix.
/// 0x0 and 0xn shapes are legal; empty products are zero matrices.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_identity() const;

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    Matrix transpose() const;

    /// Block placement: copies src into *this with top-left corner at (i, j).
    void paste(std::size_t i, std::size_t j, const Matrix& src);
    Matrix block(std::size_t i, std::size_t j, std::size_t rows, std::size_t cols) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);

/// Exact product; throws DimensionMismatch unless a.cols == b.rows.
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// a^k for square a, k >= 0 (a^0 = I).
Matrix mat_pow(const Matrix& a, std::size_t k);

/// Rank by rational Gaussian elimination with first-nonzero pivoting.
std::size_t rank(const Matrix& a);

/// Exact inverse; throws SingularMatrix when rank deficient.
Matrix inverse(const Matrix& a);

/// P * A * Q = [[I_r, 0], [0, 0]] with P, Q invertible. Pivoting is
/// deterministic (scan rows top-down, first nonzero entry, leftmost
/// unresolved column; rows eliminated before columns) so downstream
/// canonical {1}-inverses are reproducible.
struct RankNormalForm {
    Matrix P;        // rows x rows, invertible
    Matrix Q;        // cols x cols, invertible
    std::size_t r;   // rank
};
RankNormalForm rank_normal_form(const Matrix& a);

/// Von Neumann inverse of M = [[A,B],[C,D]] with A invertible, built from a
/// {1}-inverse of the Schur complement Z = D - C A^-1 B. When z_inv is the
/// true inverse of an invertible Z the result is M^-1.
Matrix schur_one_inverse(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d,
                         const Matrix& z_inv);

/// [[A,B],[C,D]] assembled from conformal blocks.
Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

/// Basis of the column space: the pivot columns of a, in order.
std::vector<std::size_t> pivot_columns(const Matrix& a);

/// Deterministic null-space basis (one column per free variable of the RREF).
/// Returns an a.cols x nullity matrix whose columns span ker(a).
Matrix null_space_basis(const Matrix& a);

}  // namespace drz

#endif
