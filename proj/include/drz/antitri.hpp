#ifndef DRZ_ANTITRI_HPP
#define DRZ_ANTITRI_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drz/geninv.hpp"
#include "drz/matrix.hpp"

namespace drz {

/// Blocks of M = [[A, B], [C, 0]] with A n x n, B n x m, C m x n.
struct AntiTriangularBlocks {
    Matrix a, b, c;
    AntiTriangularBlocks(Matrix a_, Matrix b_, Matrix c_);
    std::size_t n() const { return a.rows(); }
    std::size_t m() const { return b.cols(); }
    Matrix w() const { return b * c; }  // W = BC
};

enum class Branch {
    Invertible,
    GroupInvertible,
    IndexTwo,
    OrthogonalCase,
    OneSideCase,
    BCZero,
    AZero,
    BCNonsingular,
    ANonsingularBCZero,
    Generic,
};

std::string branch_name(Branch b);

/// Outcome of a closed-form (or direct) solve. The index is always the true
/// Drazin index of the assembled M, cross-checked by rank stabilization; any
/// returned inverse has passed the three Drazin equations. The bounds are the
/// theoretical ones for the branch; they assume M singular (automatic unless
/// m < n), and collapse to [0, 0] when M turns out invertible.
struct BranchReport {
    Branch branch;
    std::optional<std::size_t> index;
    std::size_t lower_bound = 0;
    std::size_t upper_bound = 0;
    std::optional<Matrix> drazin;
    std::vector<std::pair<std::string, bool>> checks;

    bool all_checks_pass() const {
        for (auto& [name, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

/// The (n+m) x (n+m) matrix [[A, B], [C, 0]].
Matrix assemble(const AntiTriangularBlocks& blocks);

/// Gamma = [[A, I], [W, 0]] and Omega = [[A, WW^-], [W, I - WW^-]] built with
/// the canonical W^-. Uses the Gamma^- = [[0, W^-], [I, -A W^-]] for which
/// Gamma Gamma^- = diag(I, WW^-); that identity is verified internally.
std::pair<Matrix, Matrix> gamma_omega(const AntiTriangularBlocks& blocks);

/// Group-invertibility criterion: M is group invertible iff
///   A(I - C^-C) - BC + (I - ZZ^-)(I - BB^-)(I + AC^-C - C^-C)
/// is nonsingular, Z = (I - BB^-)A(I - C^-C), all {1}-inverses canonical.
/// Throws HypothesisViolated unless A and BC are singular.
bool check_group_invertible(const AntiTriangularBlocks& blocks);

/// Index-2 criterion: when M is not group invertible and
/// BC - A(I - (BC)^-BC) is nonsingular, i(M) = 2. Note the converse fails
/// (i(M) = 2 does not force the criterion); callers get the one-way guarantee.
/// Throws HypothesisViolated unless A and BC are singular.
bool check_index_two(const AntiTriangularBlocks& blocks);

/// ABC = 0 = BCA branch:
///   M^D = [[A^D, (A^D)^2 B + B(CB)^D], [C(A^D)^2 + (CB)^D C, C(A^D)^3 B]]
/// with bounds max{i(A), 2i(BC)-1} <= i(M) <= max{i(A), 2i(BC)-1} + 2 for
/// singular M.
BranchReport drazin_orthogonal_case(const AntiTriangularBlocks& blocks);

/// ABC = 0 branch: M^D = S [[G1,G2],[G3,G4]]^2 R via the additive series with
/// k = i(A) + 2 i(BC); bounds max{i(A), 2i(BC)-1} - 1 <= i(M) <= i(A)+2i(BC)+2
/// for singular M. A "tighter-bound-holds" check records whether
/// i(M) <= max{i(A), 2i(BC)-1} + 2 also held.
BranchReport drazin_oneside_case(const AntiTriangularBlocks& blocks);

/// BC = 0 branch: M^D = [[A^D, (A^D)^2 B], [C(A^D)^2, C(A^D)^3 B]],
/// i(A) <= i(M) <= i(A) + 2 when A is singular.
BranchReport drazin_bc_zero(const AntiTriangularBlocks& blocks);

/// A = 0, BC singular branch: M^D = [[0, B(CB)^D], [(CB)^D C, 0]], equal to
/// [[0, (BC)^D B], [C(BC)^D, 0]]; 2i(BC)-1 <= i(M) <= 2i(BC)+1.
BranchReport drazin_a_zero(const AntiTriangularBlocks& blocks);

/// BC nonsingular: M is invertible iff B and C are invertible, otherwise
/// i(M) = 1 with M^# = [[0, (BC)^-1 B], [C(BC)^-1, -C(BC)^-1 A (BC)^-1 B]].
BranchReport group_bc_nonsingular(const AntiTriangularBlocks& blocks);

/// A nonsingular, BC = 0: M^D = [[A^-1, A^-2 B], [C A^-2, C A^-3 B]] and the
/// index is 1 or 2 according to the displayed invertibility criterion
/// (canonical {1}-inverses stand in for the +-marked inverses).
BranchReport drazin_a_nonsingular_bc_zero(const AntiTriangularBlocks& blocks);

/// M = [[A, I], [C, 0]] case logic: i(C) = 0 gives i(M) = 0; else a
/// nonsingular C - A(I - C^-C) gives i(M) = 1; else AC = CA = 0 gives
/// i(M) = max{i(A)+1, 2i(C)} exactly; else AC = 0 gives the one-sided bounds.
BranchReport index_b_identity(const Matrix& a, const Matrix& c);

/// Y = [[0, WW^-], [W, 0]] for singular W with the canonical W^-.
Matrix y_matrix(const Matrix& w, const Matrix& w_one);

/// Y^D = [[0, W^D W W^-], [W W^D, 0]] with i(Y) = 2 i(W) - 1; verified
/// against the defining equations before returning.
DrazinResult y_matrix_drazin(const Matrix& w);

/// Most-specific-first dispatch: BC nonsingular; A nonsingular and BC = 0;
/// B = I; BC = 0; A = 0; ABC = BCA = 0; ABC = 0; otherwise direct
/// computation. A forced branch throws HypothesisViolated when its
/// preconditions fail.
BranchReport classify_and_solve(const AntiTriangularBlocks& blocks,
                                std::optional<Branch> forced = std::nullopt);

}  // namespace drz

#endif
