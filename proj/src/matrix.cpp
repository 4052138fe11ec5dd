#include "drz/matrix.hpp"

#include <sstream>

namespace drz {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class num(text);
            return Rational(num);
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal '" + text + "'");
    }
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    if (q.get_den() == 1)
        os << q.get_num();
    else
        os << q.get_num() << '/' << q.get_den();
    return os.str();
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionMismatch("ragged initializer");
        for (const auto& e : row) entries_.push_back(e);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

void Matrix::paste(std::size_t i, std::size_t j, const Matrix& src) {
    if (i + src.rows() > rows_ || j + src.cols() > cols_)
        throw DimensionMismatch("paste out of range");
    for (std::size_t r = 0; r < src.rows(); ++r)
        for (std::size_t c = 0; c < src.cols(); ++c) (*this)(i + r, j + c) = src(r, c);
}

Matrix Matrix::block(std::size_t i, std::size_t j, std::size_t rows, std::size_t cols) const {
    if (i + rows > rows_ || j + cols > cols_) throw DimensionMismatch("block out of range");
    Matrix b(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) b(r, c) = (*this)(i + r, j + c);
    return b;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix add");
    Matrix s(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j) + b(i, j);
    return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sub");
    Matrix s(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j) - b(i, j);
    return s;
}

Matrix operator-(const Matrix& a) {
    Matrix s(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = -a(i, j);
    return s;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = s * a(i, j);
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("product of " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    Matrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += aik * b(k, j);
        }
    return p;
}

Matrix mat_pow(const Matrix& a, std::size_t k) {
    if (!a.is_square()) throw DimensionMismatch("power of non-square matrix");
    Matrix acc = Matrix::identity(a.rows());
    for (std::size_t i = 0; i < k; ++i) acc = acc * a;
    return acc;
}

namespace {

// Row echelon form in place; returns the pivot (row, col) pairs. First
// nonzero pivoting, top-down, leftmost unresolved column.
std::vector<std::pair<std::size_t, std::size_t>> echelon(Matrix& w, bool reduce) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < w.cols() && r < w.rows(); ++col) {
        std::size_t piv = r;
        while (piv < w.rows() && w(piv, col) == 0) ++piv;
        if (piv == w.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w(r, j), w(piv, j));
        Rational inv_piv = 1 / w(r, col);
        for (std::size_t j = col; j < w.cols(); ++j) w(r, j) *= inv_piv;
        std::size_t start = reduce ? 0 : r + 1;
        for (std::size_t i = start; i < w.rows(); ++i) {
            if (i == r || w(i, col) == 0) continue;
            Rational f = w(i, col);
            for (std::size_t j = col; j < w.cols(); ++j) w(i, j) -= f * w(r, j);
        }
        pivots.emplace_back(r, col);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Matrix& a) {
    Matrix w = a;
    return echelon(w, false).size();
}

std::vector<std::size_t> pivot_columns(const Matrix& a) {
    Matrix w = a;
    auto pivots = echelon(w, false);
    std::vector<std::size_t> cols;
    cols.reserve(pivots.size());
    for (auto& [r, c] : pivots) cols.push_back(c);
    return cols;
}

Matrix null_space_basis(const Matrix& a) {
    Matrix w = a;
    auto pivots = echelon(w, true);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto& [r, c] : pivots) is_pivot[c] = true;

    std::size_t nullity = a.cols() - pivots.size();
    Matrix basis(a.cols(), nullity);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        basis(free_col, out) = 1;
        for (auto& [r, c] : pivots) basis(c, out) = -w(r, free_col);
        ++out;
    }
    return basis;
}

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    std::size_t n = a.rows();
    // Gauss-Jordan on [A | I]; pivots may only come from the left half.
    Matrix w(n, 2 * n);
    w.paste(0, 0, a);
    w.paste(0, n, Matrix::identity(n));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w(piv, col) == 0) ++piv;
        if (piv == n) throw SingularMatrix("matrix is singular");
        if (piv != col)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(w(col, j), w(piv, j));
        Rational inv_piv = 1 / w(col, col);
        for (std::size_t j = 0; j < 2 * n; ++j) w(col, j) *= inv_piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w(i, col) == 0) continue;
            Rational f = w(i, col);
            for (std::size_t j = 0; j < 2 * n; ++j) w(i, j) -= f * w(col, j);
        }
    }
    return w.block(0, n, n, n);
}

RankNormalForm rank_normal_form(const Matrix& a) {
    std::size_t m = a.rows(), n = a.cols();
    Matrix w = a;
    Matrix p = Matrix::identity(m);
    Matrix q = Matrix::identity(n);
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && w(piv, col) == 0) ++piv;
        if (piv == m) continue;
        if (piv != r)
            for (std::size_t j = 0; j < n; ++j) std::swap(w(r, j), w(piv, j));
        if (piv != r)
            for (std::size_t j = 0; j < m; ++j) std::swap(p(r, j), p(piv, j));
        Rational inv_piv = 1 / w(r, col);
        for (std::size_t j = 0; j < n; ++j) w(r, j) *= inv_piv;
        for (std::size_t j = 0; j < m; ++j) p(r, j) *= inv_piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || w(i, col) == 0) continue;
            Rational f = w(i, col);
            for (std::size_t j = 0; j < n; ++j) w(i, j) -= f * w(r, j);
            for (std::size_t j = 0; j < m; ++j) p(i, j) -= f * p(r, j);
        }
        if (col != r) {
            for (std::size_t i = 0; i < m; ++i) std::swap(w(i, r), w(i, col));
            for (std::size_t i = 0; i < n; ++i) std::swap(q(i, r), q(i, col));
        }
        for (std::size_t j = r + 1; j < n; ++j) {
            if (w(r, j) == 0) continue;
            Rational f = w(r, j);
            for (std::size_t i = 0; i < m; ++i) w(i, j) -= f * w(i, r);
            for (std::size_t i = 0; i < n; ++i) q(i, j) -= f * q(i, r);
        }
        ++r;
    }
    return RankNormalForm{std::move(p), std::move(q), r};
}

Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
        b.cols() != d.cols())
        throw DimensionMismatch("non-conformal 2x2 blocks");
    Matrix m(a.rows() + c.rows(), a.cols() + b.cols());
    m.paste(0, 0, a);
    m.paste(0, a.cols(), b);
    m.paste(a.rows(), 0, c);
    m.paste(a.rows(), a.cols(), d);
    return m;
}

Matrix schur_one_inverse(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d,
                         const Matrix& z_inv) {
    Matrix ai = inverse(a);  // throws SingularMatrix for a rank-deficient corner
    Matrix z = d - c * ai * b;
    if (z.rows() != z_inv.cols() || z.cols() != z_inv.rows())
        throw DimensionMismatch("Schur complement {1}-inverse has wrong shape");
    if (z * z_inv * z != z)
        throw HypothesisViolated("supplied Z^- is not a {1}-inverse of the Schur complement");
    std::size_t n = a.rows(), m = d.rows();
    Matrix left = block2x2(Matrix::identity(n), -(ai * b), Matrix::zero(m, n), Matrix::identity(m));
    Matrix mid = block2x2(ai, Matrix::zero(n, m), Matrix::zero(m, n), z_inv);
    Matrix right = block2x2(Matrix::identity(n), Matrix::zero(n, m), -(c * ai), Matrix::identity(m));
    return left * mid * right;
}

}  // namespace drz
