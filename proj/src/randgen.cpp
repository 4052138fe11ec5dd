#include "drz/randgen.hpp"

#include "drz/geninv.hpp"

namespace drz {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rat(rng.uniform(-2, 2));
    return m;
}

Matrix random_singular(Rng& rng, std::size_t n) {
    // Mix construction recipes: plain rejection and row-zeroing lean heavily
    // toward index 1, so a third of the samples are built as an invertible
    // core plus a strictly triangular (nilpotent) tail under a random
    // similarity, which reaches every index up to n.
    if (n >= 2 && rng.uniform(0, 2) == 0) {
        std::size_t nil_dim = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
        std::size_t core_dim = n - nil_dim;
        Matrix d(n, n);
        if (core_dim > 0) d.paste(0, 0, random_invertible(rng, core_dim));
        for (std::size_t i = core_dim; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) d(i, j) = rat(rng.uniform(-2, 2));
        Matrix u = random_invertible(rng, n);
        return u * d * inverse(u);
    }
    while (true) {
        Matrix m = random_matrix(rng, n, n);
        if (rank(m) < n) return m;
        std::size_t r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        for (std::size_t j = 0; j < n; ++j) m(r, j) = 0;
        if (rank(m) < n) return m;
    }
}

Matrix random_singular_nonzero(Rng& rng, std::size_t n) {
    while (true) {
        Matrix m = random_singular(rng, n);
        if (!m.is_zero()) return m;
    }
}

Matrix random_invertible(Rng& rng, std::size_t n) {
    while (true) {
        Matrix m = random_matrix(rng, n, n);
        if (rank(m) == n) return m;
    }
}

Matrix random_nilpotent(Rng& rng, std::size_t n) {
    while (true) {
        Matrix t(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) t(i, j) = rat(rng.uniform(-2, 2));
        if (t.is_zero()) continue;
        Matrix u = random_invertible(rng, n);
        return u * t * inverse(u);
    }
}

Matrix random_one_inverse(Rng& rng, const Matrix& a) {
    Matrix canonical = one_inverse(a);
    Matrix z = random_matrix(rng, a.cols(), a.rows());
    return one_inverse_family(a, canonical, z);
}

namespace {

std::size_t dim(Rng& rng) { return static_cast<std::size_t>(rng.uniform(1, 4)); }

// Width of the rectangular blocks. m >= n keeps the assembled M singular
// (the interesting regime for the index bounds); a quarter of the draws take
// m < n, where M can come out invertible.
std::size_t block_width(Rng& rng, std::size_t n) {
    if (n >= 2 && rng.uniform(0, 3) == 0)
        return static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n) - 1));
    return static_cast<std::size_t>(rng.uniform(static_cast<long>(n), static_cast<long>(n) + 2));
}

}  // namespace

AntiTriangularBlocks random_abc_zero(Rng& rng) {
    while (true) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
        std::size_t m = block_width(rng, n);
        Matrix b = random_matrix(rng, n, m);
        Matrix c = random_matrix(rng, m, n);
        Matrix w = b * c;
        if (rank(w) == n) {  // zero a column of C so W picks up a zero column
            std::size_t col = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
            for (std::size_t i = 0; i < m; ++i) c(i, col) = 0;
            w = b * c;
        }
        Matrix left_null = null_space_basis(w.transpose());  // n x d
        if (left_null.cols() == 0) continue;
        Matrix a = random_matrix(rng, n, left_null.cols()) * left_null.transpose();
        if (!(a * w).is_zero()) continue;
        if (rank(a) == n) continue;
        if (a.is_zero() && w.is_zero()) continue;
        return AntiTriangularBlocks(std::move(a), std::move(b), std::move(c));
    }
}

AntiTriangularBlocks random_abc_bca_zero(Rng& rng) {
    while (true) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
        std::size_t m = block_width(rng, n);
        Matrix b = random_matrix(rng, n, m);
        Matrix c = random_matrix(rng, m, n);
        Matrix w = b * c;
        if (rank(w) == n) {
            std::size_t col = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
            for (std::size_t i = 0; i < m; ++i) c(i, col) = 0;
            w = b * c;
        }
        Matrix nr = null_space_basis(w.transpose());
        Matrix nc = null_space_basis(w);
        if (nr.cols() == 0 || nc.cols() == 0) continue;
        Matrix a = nc * random_matrix(rng, nc.cols(), nr.cols()) * nr.transpose();
        if (!(a * w).is_zero() || !(w * a).is_zero()) continue;
        if (rank(a) == static_cast<std::size_t>(a.rows())) continue;
        if (a.is_zero() && w.is_zero()) continue;
        return AntiTriangularBlocks(std::move(a), std::move(b), std::move(c));
    }
}

AntiTriangularBlocks random_bc_zero(Rng& rng) {
    while (true) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
        std::size_t m = dim(rng);
        Matrix b = random_matrix(rng, n, m);
        Matrix nb = null_space_basis(b);  // m x d
        Matrix c = nb.cols() == 0 ? Matrix::zero(m, n)
                                  : Matrix(nb * random_matrix(rng, nb.cols(), n));
        if (!(b * c).is_zero()) continue;
        Matrix a = random_singular(rng, n);
        return AntiTriangularBlocks(std::move(a), std::move(b), std::move(c));
    }
}

AntiTriangularBlocks random_singular_pair(Rng& rng) {
    while (true) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        std::size_t m = n == 1 ? dim(rng) : block_width(rng, n);
        Matrix a = random_singular(rng, n);
        Matrix b = random_matrix(rng, n, m);
        Matrix c = random_matrix(rng, m, n);
        if (rank(b * c) == n) continue;
        return AntiTriangularBlocks(std::move(a), std::move(b), std::move(c));
    }
}

std::pair<Matrix, Matrix> random_orthogonal_pair(Rng& rng, std::size_t n) {
    // Disjoint diagonal supports conjugated by a random similarity.
    std::size_t split = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
    Matrix x0(n, n), y0(n, n);
    x0.paste(0, 0, random_matrix(rng, split, split));
    y0.paste(split, split, random_matrix(rng, n - split, n - split));
    Matrix u = random_invertible(rng, n);
    Matrix ui = inverse(u);
    return {u * x0 * ui, u * y0 * ui};
}

std::pair<Matrix, Matrix> random_oneside_pair(Rng& rng, std::size_t n) {
    while (true) {
        Matrix x = random_matrix(rng, n, n);
        Matrix nx = null_space_basis(x);
        if (nx.cols() == 0) continue;  // X invertible leaves only Y = 0
        Matrix y = nx * random_matrix(rng, nx.cols(), n);
        if (!(x * y).is_zero()) continue;
        return {std::move(x), std::move(y)};
    }
}

}  // namespace drz
