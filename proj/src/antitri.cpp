#include "drz/antitri.hpp"

namespace drz {

AntiTriangularBlocks::AntiTriangularBlocks(Matrix a_, Matrix b_, Matrix c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (!a.is_square()) throw DimensionMismatch("A block must be square");
    if (b.rows() != a.rows()) throw DimensionMismatch("B block must have A's row count");
    if (c.cols() != a.rows() || c.rows() != b.cols())
        throw DimensionMismatch("C block must be m x n for B of shape n x m");
}

std::string branch_name(Branch b) {
    switch (b) {
        case Branch::Invertible: return "Invertible";
        case Branch::GroupInvertible: return "GroupInvertible";
        case Branch::IndexTwo: return "IndexTwo";
        case Branch::OrthogonalCase: return "OrthogonalCase";
        case Branch::OneSideCase: return "OneSideCase";
        case Branch::BCZero: return "BCZero";
        case Branch::AZero: return "AZero";
        case Branch::BCNonsingular: return "BCNonsingular";
        case Branch::ANonsingularBCZero: return "ANonsingularBCZero";
        case Branch::Generic: return "Generic";
    }
    return "?";
}

Matrix assemble(const AntiTriangularBlocks& blocks) {
    return block2x2(blocks.a, blocks.b, blocks.c, Matrix::zero(blocks.m(), blocks.m()));
}

namespace {

// Index via rank stabilization, plus the Drazin-equation check that certifies
// a candidate as THE Drazin inverse (uniqueness does the rest).
std::size_t verified_index(const Matrix& m, const Matrix& candidate, const char* what) {
    std::size_t idx = drazin_index(m);
    Matrix mk = mat_pow(m, idx);
    if (mk * m * candidate != mk || candidate * m * candidate != candidate ||
        m * candidate != candidate * m)
        throw std::logic_error(std::string(what) + ": closed form fails the Drazin equations");
    return idx;
}

std::size_t clamp0(long v) { return v < 0 ? 0 : static_cast<std::size_t>(v); }

void set_bounds(BranchReport& rep, std::size_t idx, long lo, long hi) {
    if (idx == 0) {
        rep.lower_bound = rep.upper_bound = 0;  // bounds assume singular M
    } else {
        rep.lower_bound = clamp0(lo);
        rep.upper_bound = clamp0(hi);
    }
    rep.checks.emplace_back("bounds-contain-index",
                            rep.lower_bound <= idx && idx <= rep.upper_bound);
}

}  // namespace

std::pair<Matrix, Matrix> gamma_omega(const AntiTriangularBlocks& blocks) {
    std::size_t n = blocks.n();
    Matrix w = blocks.w();
    Matrix w_one = one_inverse(w);
    Matrix id = Matrix::identity(n);
    Matrix zero = Matrix::zero(n, n);

    Matrix gamma = block2x2(blocks.a, id, w, zero);
    Matrix gamma_one = block2x2(zero, w_one, id, -(blocks.a * w_one));
    Matrix projector = gamma * gamma_one;
    if (projector != block2x2(id, zero, zero, w * w_one))
        throw std::logic_error("Gamma Gamma^- is not diag(I, WW^-)");
    Matrix omega = gamma * projector + Matrix::identity(2 * n) - projector;
    return {std::move(gamma), std::move(omega)};
}

namespace {

void require_singular_hypotheses(const AntiTriangularBlocks& blocks) {
    if (rank(blocks.a) == blocks.n())
        throw HypothesisViolated("criterion requires a singular A block");
    Matrix w = blocks.w();
    if (rank(w) == w.rows()) throw HypothesisViolated("criterion requires singular BC");
}

}  // namespace

bool check_group_invertible(const AntiTriangularBlocks& blocks) {
    require_singular_hypotheses(blocks);
    std::size_t n = blocks.n();
    Matrix id = Matrix::identity(n);
    Matrix b_one = one_inverse(blocks.b);
    Matrix c_one = one_inverse(blocks.c);
    Matrix z = (id - blocks.b * b_one) * blocks.a * (id - c_one * blocks.c);
    Matrix z_one = one_inverse(z);
    Matrix crit = blocks.a * (id - c_one * blocks.c) - blocks.w() +
                  (id - z * z_one) * (id - blocks.b * b_one) *
                      (id + blocks.a * c_one * blocks.c - c_one * blocks.c);
    return rank(crit) == n;
}

bool check_index_two(const AntiTriangularBlocks& blocks) {
    require_singular_hypotheses(blocks);
    std::size_t n = blocks.n();
    Matrix w = blocks.w();
    Matrix w_one = one_inverse(w);
    Matrix crit = w - blocks.a * (Matrix::identity(n) - w_one * w);
    return rank(crit) == n;
}

BranchReport drazin_orthogonal_case(const AntiTriangularBlocks& blocks) {
    const Matrix& a = blocks.a;
    Matrix w = blocks.w();
    if (!(a * w).is_zero()) throw HypothesisViolated("orthogonal case requires ABC = 0");
    if (!(w * a).is_zero()) throw HypothesisViolated("orthogonal case requires BCA = 0");

    Matrix ad = drazin(a).inverse;
    Matrix cbd = drazin(blocks.c * blocks.b).inverse;
    Matrix md = block2x2(ad, ad * ad * blocks.b + blocks.b * cbd,
                         blocks.c * ad * ad + cbd * blocks.c, blocks.c * ad * ad * ad * blocks.b);

    BranchReport rep;
    rep.branch = Branch::OrthogonalCase;
    Matrix m = assemble(blocks);
    std::size_t idx = verified_index(m, md, "orthogonal case");
    rep.index = idx;
    long base = std::max<long>(static_cast<long>(drazin_index(a)),
                               2 * static_cast<long>(drazin_index(w)) - 1);
    set_bounds(rep, idx, base, base + 2);
    rep.drazin = std::move(md);
    return rep;
}

BranchReport drazin_oneside_case(const AntiTriangularBlocks& blocks) {
    const Matrix& a = blocks.a;
    std::size_t n = blocks.n();
    Matrix w = blocks.w();
    if (!(a * w).is_zero()) throw HypothesisViolated("one-side case requires ABC = 0");

    DrazinResult adr = drazin(a);
    DrazinResult wdr = drazin(w);
    const Matrix& ad = adr.inverse;
    const Matrix& wd = wdr.inverse;
    std::size_t k = adr.index + 2 * wdr.index;
    if (k == 0) k = 1;

    Matrix id = Matrix::identity(n);
    Matrix alpha = Matrix::zero(n, n), beta = Matrix::zero(n, n);
    Matrix gamma = Matrix::zero(n, n), delta = Matrix::zero(n, n);
    // alpha = sum_{even j>0} W^{j/2}(A^D)^j, beta = sum_{odd j} W^{(j+1)/2}(A^D)^j,
    // gamma = sum_{even j>0} (W^D)^{j/2}A^j, delta = sum_{odd j} (W^D)^{(j+1)/2} W A^j.
    // The W factor inside delta comes from the odd powers of Y^D, whose
    // off-diagonal blocks are (W^D)^{(j+1)/2}WW^- and (W^D)^{(j+1)/2}W.
    Matrix w_half = id, wd_half = id;   // W^{ceil(j/2)} trackers
    Matrix ad_pow = id, a_pow = id;     // (A^D)^j, A^j
    for (std::size_t j = 1; j < k; ++j) {
        ad_pow = ad_pow * ad;
        a_pow = a_pow * a;
        if (j % 2 == 1) {
            w_half = w_half * w;
            wd_half = wd_half * wd;
            beta = beta + w_half * ad_pow;
            delta = delta + wd_half * w * a_pow;
        } else {
            alpha = alpha + w_half * ad_pow;
            gamma = gamma + wd_half * a_pow;
        }
    }

    Matrix ww_d = w * wd;
    Matrix aa_d = a * ad;
    // The delta term of g3 carries a trailing A: it comes from the second
    // block column of (X+Y)^D squared multiplied back into Gamma.
    Matrix g1 = (id - ww_d) * (id + alpha) * ad + wd * (id + gamma) * (id - aa_d) * a;
    Matrix g2 = (id - ww_d) * (id + alpha) * ad * ad + wd * (id + gamma) * (id - aa_d);
    Matrix g3 = (id - ww_d) * beta * ad + wd * delta * (id - aa_d) * a - ww_d * aa_d + ww_d;
    Matrix g4 = (id - ww_d) * beta * ad * ad + wd * delta * (id - aa_d) - ww_d * ad;
    Matrix g = block2x2(g1, g2, g3, g4);

    // M^D = S (Gamma^D)^2 R with S = [[A, I], [C, 0]] and R = [[I, 0], [0, B]].
    std::size_t m_cols = blocks.m();
    Matrix s = Matrix::zero(n + m_cols, 2 * n);
    s.paste(0, 0, a);
    s.paste(0, n, id);
    s.paste(n, 0, blocks.c);
    Matrix r = Matrix::zero(2 * n, n + m_cols);
    r.paste(0, 0, id);
    r.paste(n, n, blocks.b);

    Matrix md = s * g * g * r;

    BranchReport rep;
    rep.branch = Branch::OneSideCase;
    Matrix m = assemble(blocks);
    std::size_t idx = verified_index(m, md, "one-side case");
    rep.index = idx;
    long ia = static_cast<long>(adr.index);
    long iw = static_cast<long>(wdr.index);
    long base = std::max(ia, 2 * iw - 1);
    set_bounds(rep, idx, base - 1, ia + 2 * iw + 2);
    rep.drazin = std::move(md);
    return rep;
}

BranchReport drazin_bc_zero(const AntiTriangularBlocks& blocks) {
    if (!blocks.w().is_zero()) throw HypothesisViolated("branch requires BC = 0");
    Matrix ad = drazin(blocks.a).inverse;
    Matrix md = block2x2(ad, ad * ad * blocks.b, blocks.c * ad * ad,
                         blocks.c * ad * ad * ad * blocks.b);

    BranchReport rep;
    rep.branch = Branch::BCZero;
    Matrix m = assemble(blocks);
    std::size_t idx = verified_index(m, md, "BC = 0 case");
    rep.index = idx;
    long ia = static_cast<long>(drazin_index(blocks.a));
    set_bounds(rep, idx, ia, ia + 2);
    rep.drazin = std::move(md);
    return rep;
}

BranchReport drazin_a_zero(const AntiTriangularBlocks& blocks) {
    if (!blocks.a.is_zero()) throw HypothesisViolated("branch requires A = 0");
    Matrix w = blocks.w();
    if (rank(w) == w.rows())
        throw HypothesisViolated("branch requires singular BC; use the BC-nonsingular branch");

    std::size_t n = blocks.n(), m_cols = blocks.m();
    Matrix cbd = drazin(blocks.c * blocks.b).inverse;
    Matrix md = block2x2(Matrix::zero(n, n), blocks.b * cbd, cbd * blocks.c,
                         Matrix::zero(m_cols, m_cols));

    BranchReport rep;
    rep.branch = Branch::AZero;
    Matrix m = assemble(blocks);
    std::size_t idx = verified_index(m, md, "A = 0 case");
    rep.index = idx;

    Matrix wd = drazin(w).inverse;
    Matrix alt = block2x2(Matrix::zero(n, n), wd * blocks.b, blocks.c * wd,
                          Matrix::zero(m_cols, m_cols));
    rep.checks.emplace_back("equivalent-form", alt == md);

    long iw = static_cast<long>(drazin_index(w));
    set_bounds(rep, idx, 2 * iw - 1, 2 * iw + 1);
    rep.drazin = std::move(md);
    return rep;
}

BranchReport group_bc_nonsingular(const AntiTriangularBlocks& blocks) {
    Matrix w = blocks.w();
    std::size_t n = blocks.n(), m_cols = blocks.m();
    if (rank(w) != n) throw HypothesisViolated("branch requires nonsingular BC");

    Matrix wi = inverse(w);
    Matrix msharp = block2x2(Matrix::zero(n, n), wi * blocks.b, blocks.c * wi,
                             -(blocks.c * wi * blocks.a * wi * blocks.b));

    BranchReport rep;
    bool square = n == m_cols;
    bool both_invertible = square && rank(blocks.b) == n && rank(blocks.c) == n;
    rep.branch = both_invertible ? Branch::Invertible : Branch::GroupInvertible;

    Matrix m = assemble(blocks);
    std::size_t idx = verified_index(m, msharp, "BC nonsingular case");
    rep.index = idx;
    rep.checks.emplace_back("dichotomy", idx == (both_invertible ? 0u : 1u));
    rep.lower_bound = rep.upper_bound = idx;
    rep.drazin = std::move(msharp);
    return rep;
}

BranchReport drazin_a_nonsingular_bc_zero(const AntiTriangularBlocks& blocks) {
    std::size_t n = blocks.n(), m_cols = blocks.m();
    if (rank(blocks.a) != n) throw HypothesisViolated("branch requires nonsingular A");
    if (!blocks.w().is_zero()) throw HypothesisViolated("branch requires BC = 0");

    Matrix ai = inverse(blocks.a);
    BranchReport rep;
    if (m_cols == 0) {
        // M degenerates to A itself.
        rep.branch = Branch::Invertible;
        rep.index = 0;
        rep.drazin = ai;
        rep.lower_bound = rep.upper_bound = 0;
        rep.checks.emplace_back("bounds-contain-index", true);
        return rep;
    }
    Matrix md = block2x2(ai, ai * ai * blocks.b, blocks.c * ai * ai,
                         blocks.c * ai * ai * ai * blocks.b);

    rep.branch = Branch::ANonsingularBCZero;
    Matrix m = assemble(blocks);
    std::size_t idx = verified_index(m, md, "A nonsingular, BC = 0 case");
    rep.index = idx;

    Matrix id = Matrix::identity(n);
    Matrix b_one = one_inverse(blocks.b);
    Matrix c_one = one_inverse(blocks.c);
    Matrix z = (id - blocks.b * b_one) * blocks.a * (id - c_one * blocks.c);
    Matrix z_one = one_inverse(z);
    Matrix crit = blocks.a * (id - c_one * blocks.c) +
                  (id - z * z_one) * (id - blocks.b * b_one) *
                      (id + blocks.a * c_one * blocks.c - c_one * blocks.c);
    std::size_t predicted = rank(crit) == n ? 1 : 2;
    rep.checks.emplace_back("criterion-index", predicted == idx);
    rep.lower_bound = 1;
    rep.upper_bound = 2;
    rep.checks.emplace_back("bounds-contain-index", idx >= 1 && idx <= 2);
    rep.drazin = std::move(md);
    return rep;
}

BranchReport index_b_identity(const Matrix& a, const Matrix& c) {
    if (!a.is_square() || !c.is_square() || a.rows() != c.rows())
        throw DimensionMismatch("B = I case needs square A, C of equal size");
    std::size_t n = a.rows();
    AntiTriangularBlocks blocks(a, Matrix::identity(n), c);
    Matrix m = assemble(blocks);

    BranchReport rep;
    std::size_t ic = drazin_index(c);
    if (ic == 0) {
        Matrix ci = inverse(c);
        Matrix mi = block2x2(Matrix::zero(n, n), ci, Matrix::identity(n), -(a * ci));
        rep.branch = Branch::Invertible;
        std::size_t idx = verified_index(m, mi, "B = I, C invertible");
        rep.index = idx;
        rep.lower_bound = rep.upper_bound = 0;
        rep.checks.emplace_back("index-zero", idx == 0);
        rep.drazin = std::move(mi);
        return rep;
    }

    Matrix c_one = one_inverse(c);
    Matrix crit = c - a * (Matrix::identity(n) - c_one * c);
    if (rank(crit) == n) {
        Matrix md = drazin(m).inverse;
        rep.branch = Branch::GroupInvertible;
        std::size_t idx = verified_index(m, md, "B = I group case");
        rep.index = idx;
        rep.lower_bound = rep.upper_bound = 1;
        rep.checks.emplace_back("criterion-index", idx == 1);
        rep.drazin = std::move(md);
        return rep;
    }

    bool ac_zero = (a * c).is_zero();
    bool ca_zero = (c * a).is_zero();
    long ia = static_cast<long>(drazin_index(a));
    if (ac_zero && ca_zero) {
        rep = drazin_orthogonal_case(blocks);
        std::size_t expected = static_cast<std::size_t>(std::max(ia + 1, 2 * static_cast<long>(ic)));
        rep.checks.emplace_back("exact-index", rep.index == expected);
        rep.lower_bound = rep.upper_bound = expected;
        return rep;
    }
    if (ac_zero) {
        rep = drazin_oneside_case(blocks);
        // Sharper bounds hold when B = I.
        std::size_t idx = *rep.index;
        rep.lower_bound = clamp0(std::max(ia, 2 * static_cast<long>(ic) - 1));
        rep.upper_bound = static_cast<std::size_t>(ia + 2 * static_cast<long>(ic) + 1);
        rep.checks.emplace_back("sharp-bounds-contain-index",
                                rep.lower_bound <= idx && idx <= rep.upper_bound);
        return rep;
    }

    Matrix md = drazin(m).inverse;
    rep.branch = Branch::Generic;
    std::size_t idx = verified_index(m, md, "B = I generic case");
    rep.index = idx;
    rep.lower_bound = rep.upper_bound = idx;
    rep.drazin = std::move(md);
    return rep;
}

Matrix y_matrix(const Matrix& w, const Matrix& w_one) {
    std::size_t n = w.rows();
    return block2x2(Matrix::zero(n, n), w * w_one, w, Matrix::zero(n, n));
}

DrazinResult y_matrix_drazin(const Matrix& w) {
    if (!w.is_square()) throw DimensionMismatch("Y construction needs square W");
    std::size_t n = w.rows();
    if (rank(w) == n) throw HypothesisViolated("Y construction requires singular W");

    Matrix w_one = one_inverse(w);
    Matrix y = y_matrix(w, w_one);
    Matrix wd = drazin(w).inverse;
    Matrix yd = block2x2(Matrix::zero(n, n), wd * w * w_one, w * wd, Matrix::zero(n, n));

    std::size_t idx = verified_index(y, yd, "Y matrix");
    std::size_t expected = 2 * drazin_index(w) - 1;
    if (idx != expected) throw std::logic_error("i(Y) != 2 i(W) - 1");
    return DrazinResult{std::move(yd), idx};
}

namespace {

BranchReport solve_generic(const AntiTriangularBlocks& blocks) {
    Matrix m = assemble(blocks);
    DrazinResult d = drazin(m);
    BranchReport rep;
    rep.branch = Branch::Generic;
    rep.index = d.index;
    rep.lower_bound = rep.upper_bound = d.index;
    rep.checks.emplace_back("bounds-contain-index", true);
    rep.drazin = std::move(d.inverse);
    return rep;
}

}  // namespace

BranchReport classify_and_solve(const AntiTriangularBlocks& blocks, std::optional<Branch> forced) {
    std::size_t n = blocks.n();
    Matrix w = blocks.w();
    bool w_nonsingular = rank(w) == n;
    bool a_nonsingular = rank(blocks.a) == n;
    bool bc_zero = w.is_zero();
    bool b_identity = blocks.b.is_identity();
    bool abc_zero = (blocks.a * w).is_zero();
    bool bca_zero = (w * blocks.a).is_zero();

    if (forced) {
        switch (*forced) {
            case Branch::BCNonsingular: {
                BranchReport rep = group_bc_nonsingular(blocks);
                rep.branch = Branch::BCNonsingular;
                return rep;
            }
            case Branch::ANonsingularBCZero: return drazin_a_nonsingular_bc_zero(blocks);
            case Branch::BCZero: return drazin_bc_zero(blocks);
            case Branch::AZero: return drazin_a_zero(blocks);
            case Branch::OrthogonalCase: return drazin_orthogonal_case(blocks);
            case Branch::OneSideCase: return drazin_oneside_case(blocks);
            case Branch::Generic: return solve_generic(blocks);
            default:
                throw HypothesisViolated("branch '" + branch_name(*forced) +
                                         "' cannot be forced");
        }
    }

    BranchReport rep;
    if (w_nonsingular) {
        rep = group_bc_nonsingular(blocks);
        rep.branch = Branch::BCNonsingular;
    } else if (a_nonsingular && bc_zero) {
        rep = drazin_a_nonsingular_bc_zero(blocks);
    } else if (b_identity) {
        rep = index_b_identity(blocks.a, blocks.c);
    } else if (bc_zero) {
        rep = drazin_bc_zero(blocks);
    } else if (blocks.a.is_zero()) {
        rep = drazin_a_zero(blocks);
    } else if (abc_zero && bca_zero) {
        rep = drazin_orthogonal_case(blocks);
    } else if (abc_zero) {
        rep = drazin_oneside_case(blocks);
    } else {
        rep = solve_generic(blocks);
    }

    if (rep.index && (*rep.index < rep.lower_bound || *rep.index > rep.upper_bound))
        throw std::logic_error("reported bounds do not contain the computed index");
    return rep;
}

}  // namespace drz
