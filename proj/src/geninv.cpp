#include "drz/geninv.hpp"

#include <string>

namespace drz {

std::size_t drazin_index(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("Drazin index of non-square matrix");
    std::size_t prev = a.rows();  // rank(A^0)
    Matrix p = a;
    for (std::size_t k = 1;; ++k) {
        std::size_t r = rank(p);
        if (r == prev) return k - 1;
        prev = r;
        p = p * a;
    }
}

Matrix one_inverse(const Matrix& a) {
    auto rnf = rank_normal_form(a);
    Matrix d = Matrix::zero(a.cols(), a.rows());
    for (std::size_t i = 0; i < rnf.r; ++i) d(i, i) = 1;
    return rnf.Q * d * rnf.P;
}

Matrix one_inverse_family(const Matrix& a, const Matrix& a_one, const Matrix& z) {
    if (a_one.rows() != a.cols() || a_one.cols() != a.rows())
        throw DimensionMismatch("{1}-inverse has wrong shape");
    if (z.rows() != a_one.rows() || z.cols() != a_one.cols())
        throw DimensionMismatch("family parameter has wrong shape");
    return a_one + z - a_one * a * z * a * a_one;
}

bool is_one_inverse(const Matrix& a, const Matrix& x) {
    if (x.rows() != a.cols() || x.cols() != a.rows()) return false;
    return a * x * a == a;
}

CoreNilpotent core_nilpotent(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("core-nilpotent of non-square matrix");
    std::size_t n = a.rows();
    std::size_t k = drazin_index(a);
    Matrix ak = mat_pow(a, k);

    auto piv = pivot_columns(ak);
    Matrix ns = null_space_basis(ak);
    Matrix u(n, n);
    std::size_t r = piv.size();
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < n; ++i) u(i, j) = ak(i, piv[j]);
    u.paste(0, r, ns);

    Matrix u_inv = inverse(u);  // col(A^k) + null(A^k) spans, so u is invertible
    Matrix d = u_inv * a * u;
    Matrix core = d.block(0, 0, r, r);
    Matrix nil = d.block(r, r, n - r, n - r);
    // Both spaces are A-invariant; the off-diagonal blocks must vanish.
    if (!d.block(0, r, r, n - r).is_zero() || !d.block(r, 0, n - r, r).is_zero())
        throw std::logic_error("core-nilpotent similarity did not block-diagonalize");
    return CoreNilpotent{std::move(u), std::move(u_inv), std::move(core), std::move(nil), k};
}

DrazinResult drazin(const Matrix& a) {
    CoreNilpotent cn = core_nilpotent(a);
    std::size_t n = a.rows(), r = cn.core.rows();
    Matrix mid = Matrix::zero(n, n);
    if (r > 0) mid.paste(0, 0, inverse(cn.core));
    Matrix d = cn.u * mid * cn.u_inv;

    Matrix ak = mat_pow(a, cn.index);
    if (ak * a * d != ak || d * a * d != d || a * d != d * a)
        throw std::logic_error("computed Drazin inverse fails its defining equations");
    return DrazinResult{std::move(d), cn.index};
}

Matrix group_inverse(const Matrix& a) {
    DrazinResult d = drazin(a);
    if (d.index > 1)
        throw IndexTooLarge("group inverse requires index <= 1, got " + std::to_string(d.index));
    return d.inverse;
}

Matrix cline_drazin(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || b.cols() != a.rows())
        throw DimensionMismatch("Cline formula needs conformal A, B with AB and BA square");
    Matrix ba_d = drazin(b * a).inverse;
    return a * ba_d * ba_d * b;
}

Matrix special_sum(const Matrix& a, const Matrix& a_one) {
    if (!is_one_inverse(a, a_one))
        throw HypothesisViolated("special sum requires a {1}-inverse of A");
    Matrix id = Matrix::identity(a.rows());
    return a * a * a_one + id - a * a_one;
}

Matrix drazin_via_special_sum(const Matrix& a, const Matrix& a_one) {
    Matrix s = special_sum(a, a_one);
    Matrix sd = drazin(s).inverse;
    return sd * sd * a;
}

DrazinResult additive_drazin_orthogonal(const Matrix& x, const Matrix& y) {
    if (!x.is_square() || x.rows() != y.rows() || x.cols() != y.cols())
        throw DimensionMismatch("orthogonal additive formula needs equal square shapes");
    if (!(x * y).is_zero() || !(y * x).is_zero())
        throw OrthogonalityViolated("additive formula requires XY = YX = 0");
    Matrix d = drazin(x).inverse + drazin(y).inverse;
    Matrix s = x + y;
    std::size_t idx = drazin_index(s);
    Matrix sk = mat_pow(s, idx);
    if (sk * s * d != sk || d * s * d != d || s * d != d * s)
        throw std::logic_error("orthogonal additive Drazin inverse fails verification");
    return DrazinResult{std::move(d), idx};
}

Matrix additive_drazin_oneside(const Matrix& x, const Matrix& y) {
    if (!x.is_square() || x.rows() != y.rows() || x.cols() != y.cols())
        throw DimensionMismatch("one-sided additive formula needs equal square shapes");
    if (!(x * y).is_zero())
        throw OrthogonalityViolated("one-sided additive formula requires XY = 0");
    std::size_t n = x.rows();
    DrazinResult xd = drazin(x);
    DrazinResult yd = drazin(y);
    std::size_t k = xd.index + yd.index;
    if (k == 0) k = 1;

    Matrix id = Matrix::identity(n);
    Matrix sum1 = Matrix::zero(n, n);  // sum_{j<k} Y^j (X^D)^j
    Matrix sum2 = Matrix::zero(n, n);  // sum_{j<k} (Y^D)^j X^j
    Matrix t1 = id, t2 = id;
    for (std::size_t j = 0; j < k; ++j) {
        sum1 = sum1 + t1;
        sum2 = sum2 + t2;
        t1 = y * t1 * xd.inverse;
        t2 = yd.inverse * t2 * x;
    }
    return (id - y * yd.inverse) * sum1 * xd.inverse +
           yd.inverse * sum2 * (id - x * xd.inverse);
}

}  // namespace drz
