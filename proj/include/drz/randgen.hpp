#ifndef DRZ_RANDGEN_HPP
#define DRZ_RANDGEN_HPP

#include <cstdint>

#include "drz/antitri.hpp"
#include "drz/matrix.hpp"

namespace drz {

/// splitmix64 — tiny, seedable, identical everywhere. std distributions are
/// not reproducible across standard libraries, so suites use this directly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// uniform in [lo, hi] inclusive
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

/// Uniform matrix with integer entries in {-2..2} (the suites' scalar pool).
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);

/// Square and singular (resampled with a zeroed row until rank deficient).
Matrix random_singular(Rng& rng, std::size_t n);

/// Square, singular, nonzero.
Matrix random_singular_nonzero(Rng& rng, std::size_t n);

Matrix random_invertible(Rng& rng, std::size_t n);

/// Strictly upper-triangular under a random similarity: nonzero nilpotent.
Matrix random_nilpotent(Rng& rng, std::size_t n);

/// Random member of A{1} through the affine family around the canonical one.
Matrix random_one_inverse(Rng& rng, const Matrix& a);

/// Random block triple with singular BC and A built from the left null space
/// of BC, so that ABC = 0 (and A singular whenever BC != 0).
AntiTriangularBlocks random_abc_zero(Rng& rng);

/// Additionally BCA = 0: A = N_col S N_row^T over the two null spaces.
AntiTriangularBlocks random_abc_bca_zero(Rng& rng);

/// Random blocks with BC = 0 and singular A (C's columns live in null(B)).
AntiTriangularBlocks random_bc_zero(Rng& rng);

/// Random blocks with both A and BC singular, no annihilation constraint.
AntiTriangularBlocks random_singular_pair(Rng& rng);

/// Pair X, Y with XY = YX = 0 built on complementary diagonal supports.
std::pair<Matrix, Matrix> random_orthogonal_pair(Rng& rng, std::size_t n);

/// Pair with XY = 0 only (columns of Y drawn from null(X)).
std::pair<Matrix, Matrix> random_oneside_pair(Rng& rng, std::size_t n);

}  // namespace drz

#endif
