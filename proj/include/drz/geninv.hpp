#ifndef DRZ_GENINV_HPP
#define DRZ_GENINV_HPP

#include <cstddef>

#include "drz/matrix.hpp"

namespace drz {

/// A = U * diag(core, nil) * U^-1 with core invertible (r x r, r = rank(A^k))
/// and nil nilpotent of index k = i(A). U's columns are a basis of col(A^k)
/// followed by a basis of null(A^k).
struct CoreNilpotent {
    Matrix u;
    Matrix u_inv;
    Matrix core;
    Matrix nil;
    std::size_t index;
};

struct DrazinResult {
    Matrix inverse;
    std::size_t index;
};

/// Least k >= 0 with rank(A^k) = rank(A^{k+1}).
std::size_t drazin_index(const Matrix& a);

/// Canonical {1}-inverse Q * [[I_r,0],[0,0]] * P from the rank normal form.
Matrix one_inverse(const Matrix& a);

/// A^= = A^- + Z - A^- A Z A A^-. Ranging Z over all matrices of A^-'s shape
/// sweeps out the whole set A{1}.
Matrix one_inverse_family(const Matrix& a, const Matrix& a_one, const Matrix& z);

/// True when x solves A X A = A.
bool is_one_inverse(const Matrix& a, const Matrix& x);

CoreNilpotent core_nilpotent(const Matrix& a);

/// Drazin inverse via the core-nilpotent decomposition. The result is checked
/// against the three defining equations before returning.
DrazinResult drazin(const Matrix& a);

/// Group inverse A^#; throws IndexTooLarge when i(A) >= 2.
Matrix group_inverse(const Matrix& a);

/// (AB)^D computed as A ((BA)^D)^2 B.
Matrix cline_drazin(const Matrix& a, const Matrix& b);

/// A^2 A^- + I - A A^-. Throws HypothesisViolated unless a_one is in A{1}.
Matrix special_sum(const Matrix& a, const Matrix& a_one);

/// A^D recovered as ((A^2 A^- + I - A A^-)^D)^2 * A.
Matrix drazin_via_special_sum(const Matrix& a, const Matrix& a_one);

/// (X+Y)^D = X^D + Y^D under XY = YX = 0. The returned index is the true
/// i(X+Y); it equals max(i(X), i(Y)) whenever X+Y is singular.
DrazinResult additive_drazin_orthogonal(const Matrix& x, const Matrix& y);

/// (X+Y)^D under the one-sided condition XY = 0, by the additive series
///   (I-YY^D)(sum Y^n (X^D)^n) X^D + Y^D (sum (Y^D)^n X^n)(I-XX^D)
/// truncated at k = i(X) + i(Y); later summands vanish under the projectors.
Matrix additive_drazin_oneside(const Matrix& x, const Matrix& y);

}  // namespace drz

#endif
