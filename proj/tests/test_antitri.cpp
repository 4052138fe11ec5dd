#include <doctest.h>

#include "drz/antitri.hpp"
#include "drz/polynomial.hpp"
#include "drz/randgen.hpp"

using namespace drz;

namespace {

Matrix jordan_block(std::size_t n) {
    Matrix j(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
    return j;
}

AntiTriangularBlocks example_blocks_1() {
    Matrix a{{rat(1, 2), rat(0), rat(0)}, {rat(0), rat(2), rat(-2)}, {rat(1, 2), rat(2), rat(-2)}};
    Matrix b{{rat(1), rat(-1, 2), rat(-2), rat(-1, 2), rat(-1), rat(1, 2)},
             {rat(0), rat(-1), rat(1), rat(0), rat(0), rat(-1)},
             {rat(1), rat(-3, 2), rat(-1), rat(-1, 2), rat(-1), rat(-1, 2)}};
    Matrix c{{rat(1), rat(0), rat(0)},
             {rat(0), rat(1), rat(0)},
             {rat(0), rat(0), rat(1)},
             {rat(0), rat(0), rat(0)},
             {rat(1), rat(-1), rat(-3, 2)},
             {rat(0), rat(-1), rat(1)}};
    return AntiTriangularBlocks(std::move(a), std::move(b), std::move(c));
}

AntiTriangularBlocks example_blocks_2() {
    Matrix b{{rat(3), rat(0), rat(0), rat(0), rat(0)},
             {rat(1), rat(0), rat(0), rat(0), rat(0)},
             {rat(0), rat(0), rat(0), rat(0), rat(0)}};
    Matrix c{{rat(0), rat(0), rat(0)},
             {rat(0), rat(1), rat(4)},
             {rat(0), rat(0), rat(0)},
             {rat(0), rat(0), rat(0)},
             {rat(0), rat(0), rat(0)}};
    return AntiTriangularBlocks(jordan_block(3), std::move(b), std::move(c));
}

}  // namespace

TEST_CASE("assemble") {
    AntiTriangularBlocks z(Matrix::zero(1, 1), Matrix::zero(1, 1), Matrix::zero(1, 1));
    CHECK(assemble(z) == Matrix::zero(2, 2));

    AntiTriangularBlocks p1 = example_blocks_1();
    Matrix m = assemble(p1);
    CHECK(m.rows() == 9);
    CHECK(m.cols() == 9);
    CHECK(m(0, 0) == rat(1, 2));
    CHECK(m(0, 4) == rat(-1, 2));
    CHECK(m.block(3, 3, 6, 6).is_zero());
    CHECK(p1.w().is_zero());

    // zero-width B degenerates to A itself
    Matrix a{{rat(1), rat(2)}, {rat(3), rat(4)}};
    AntiTriangularBlocks thin(a, Matrix::zero(2, 0), Matrix::zero(0, 2));
    CHECK(assemble(thin) == a);

    CHECK_THROWS_AS(AntiTriangularBlocks(Matrix::zero(2, 2), Matrix::zero(3, 1),
                                         Matrix::zero(1, 2)),
                    DimensionMismatch);
}

TEST_CASE("gamma and omega") {
    Rng rng(83);
    SUBCASE("invertible W leaves Gamma untouched") {
        Matrix b = random_invertible(rng, 2);
        Matrix c = random_invertible(rng, 2);
        Matrix a = random_matrix(rng, 2, 2);
        AntiTriangularBlocks blocks(a, b, c);
        auto [gamma, omega] = gamma_omega(blocks);
        CHECK(omega == gamma);
    }
    SUBCASE("zero W") {
        AntiTriangularBlocks blocks = example_blocks_1();
        auto [gamma, omega] = gamma_omega(blocks);
        Matrix expected = Matrix::zero(6, 6);
        expected.paste(0, 0, blocks.a);
        expected.paste(3, 3, Matrix::identity(3));
        CHECK(omega == expected);
    }
    SUBCASE("index drops by one") {
        for (int t = 0; t < 25; ++t) {
            AntiTriangularBlocks blocks = random_singular_pair(rng);
            auto [gamma, omega] = gamma_omega(blocks);
            CHECK(drazin_index(gamma) == drazin_index(omega) + 1);
        }
    }
}

TEST_CASE("group-invertibility criterion") {
    AntiTriangularBlocks trivial(Matrix::zero(1, 1), Matrix::zero(1, 1), Matrix::zero(1, 1));
    CHECK(check_group_invertible(trivial));
    CHECK(drazin_index(assemble(trivial)) == 1);

    AntiTriangularBlocks p1 = example_blocks_1();
    CHECK_FALSE(check_group_invertible(p1));  // i(M) = 3

    Rng rng(89);
    for (int t = 0; t < 60; ++t) {
        AntiTriangularBlocks blocks = random_singular_pair(rng);
        CHECK(check_group_invertible(blocks) == (drazin_index(assemble(blocks)) <= 1));
    }

    Matrix inv{{rat(1), rat(0)}, {rat(0), rat(1)}};
    CHECK_THROWS_AS(
        check_group_invertible(AntiTriangularBlocks(inv, Matrix::zero(2, 1), Matrix::zero(1, 2))),
        HypothesisViolated);
}

TEST_CASE("index-two criterion") {
    AntiTriangularBlocks p1 = example_blocks_1();
    CHECK_FALSE(check_index_two(p1));

    // hunt a criterion-positive instance and confirm the predicted index
    Rng rng(97);
    int found = 0;
    for (int t = 0; t < 400 && found < 5; ++t) {
        AntiTriangularBlocks blocks = random_singular_pair(rng);
        if (check_group_invertible(blocks)) continue;
        if (!check_index_two(blocks)) continue;
        ++found;
        CHECK(drazin_index(assemble(blocks)) == 2);
    }
    CHECK(found > 0);
}

TEST_CASE("orthogonal-case closed form") {
    SUBCASE("BC = 0 instances reduce to the simpler closed form") {
        AntiTriangularBlocks p1 = example_blocks_1();
        BranchReport rep = drazin_orthogonal_case(p1);
        CHECK(rep.drazin == drazin(assemble(p1)).inverse);
        CHECK(rep.index == 3);
    }
    SUBCASE("random doubly annihilating blocks") {
        Rng rng(101);
        for (int t = 0; t < 40; ++t) {
            AntiTriangularBlocks blocks = random_abc_bca_zero(rng);
            BranchReport rep = drazin_orthogonal_case(blocks);
            CHECK(rep.drazin == drazin(assemble(blocks)).inverse);
        }
    }
    SUBCASE("hypothesis gate") {
        Rng rng(103);
        Matrix a = Matrix::identity(2);
        Matrix b = random_invertible(rng, 2);
        Matrix c = random_invertible(rng, 2);
        CHECK_THROWS_AS(drazin_orthogonal_case(AntiTriangularBlocks(a, b, c)),
                        HypothesisViolated);
    }
}

TEST_CASE("one-side-case closed form") {
    SUBCASE("doubly annihilating input agrees with the orthogonal branch") {
        Rng rng(107);
        for (int t = 0; t < 15; ++t) {
            AntiTriangularBlocks blocks = random_abc_bca_zero(rng);
            BranchReport oneside = drazin_oneside_case(blocks);
            BranchReport orth = drazin_orthogonal_case(blocks);
            CHECK(oneside.drazin == orth.drazin);
        }
    }
    SUBCASE("second worked example: equal indices") {
        AntiTriangularBlocks p2 = example_blocks_2();
        REQUIRE((p2.a * p2.w()).is_zero());
        BranchReport rep = drazin_oneside_case(p2);
        CHECK(rep.index == 3);
        CHECK(rep.drazin == drazin(assemble(p2)).inverse);
    }
    SUBCASE("random annihilating blocks") {
        Rng rng(109);
        for (int t = 0; t < 40; ++t) {
            AntiTriangularBlocks blocks = random_abc_zero(rng);
            BranchReport rep = drazin_oneside_case(blocks);
            CHECK(rep.drazin == drazin(assemble(blocks)).inverse);
        }
    }
}

TEST_CASE("BC = 0 branch attains all three index gaps") {
    AntiTriangularBlocks p1 = example_blocks_1();
    BranchReport r1 = drazin_bc_zero(p1);
    CHECK(drazin_index(p1.a) == 2);
    CHECK(r1.index == 3);  // i(A) + 1

    AntiTriangularBlocks p2 = example_blocks_2();
    BranchReport r2 = drazin_bc_zero(p2);
    CHECK(drazin_index(p2.a) == 3);
    CHECK(r2.index == 3);  // i(A)

    Matrix a3{{rat(1), rat(-1), rat(1)}, {rat(1), rat(2), rat(0)}, {rat(2), rat(1), rat(1)}};
    Matrix b3{{rat(-1), rat(0), rat(-1), rat(-1, 2)},
              {rat(0), rat(0), rat(0), rat(0)},
              {rat(0), rat(0), rat(0), rat(0)}};
    Matrix c3{{rat(1), rat(0), rat(0)},
              {rat(0), rat(0), rat(0)},
              {rat(0), rat(0), rat(0)},
              {rat(-2), rat(0), rat(0)}};
    AntiTriangularBlocks p3(a3, b3, c3);
    BranchReport r3 = drazin_bc_zero(p3);
    CHECK(drazin_index(p3.a) == 1);
    CHECK(r3.index == 3);  // i(A) + 2

    CHECK_THROWS_AS(drazin_bc_zero(AntiTriangularBlocks(
                        Matrix::identity(1), Matrix::identity(1), Matrix::identity(1))),
                    HypothesisViolated);
}

TEST_CASE("A = 0 branch") {
    Matrix j2 = jordan_block(2);
    AntiTriangularBlocks jj(Matrix::zero(2, 2), j2, j2);
    BranchReport rep = drazin_a_zero(jj);
    CHECK(rep.drazin->is_zero());
    // M is nonzero with M^2 = 0, so the index is 2 (inside the [1, 3] bounds)
    CHECK(rep.index == 2);

    Rng rng(113);
    int found = 0;
    for (int t = 0; t < 300 && found < 10; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
        Matrix b = random_matrix(rng, n, n);
        Matrix c = random_matrix(rng, n, n);
        if (drazin_index(b * c) != 2) continue;
        ++found;
        AntiTriangularBlocks blocks(Matrix::zero(n, n), b, c);
        BranchReport r = drazin_a_zero(blocks);
        CHECK(r.drazin == drazin(assemble(blocks)).inverse);
        CHECK(*r.index >= 3);
        CHECK(*r.index <= 5);
    }
    CHECK(found > 0);

    CHECK_THROWS_AS(drazin_a_zero(AntiTriangularBlocks(Matrix::zero(2, 2),
                                                       Matrix::identity(2),
                                                       Matrix::identity(2))),
                    HypothesisViolated);
}

TEST_CASE("BC nonsingular branch") {
    Matrix id2 = Matrix::identity(2);
    AntiTriangularBlocks flip(Matrix::zero(2, 2), id2, id2);
    BranchReport rep = group_bc_nonsingular(flip);
    CHECK(rep.branch == Branch::Invertible);
    CHECK(rep.index == 0);
    CHECK(rep.drazin == block2x2(Matrix::zero(2, 2), id2, id2, Matrix::zero(2, 2)));

    Rng rng(127);
    int found = 0;
    for (int t = 0; t < 200 && found < 10; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        std::size_t m = n + static_cast<std::size_t>(rng.uniform(1, 2));
        Matrix b = random_matrix(rng, n, m);
        Matrix c = random_matrix(rng, m, n);
        if (rank(b * c) != n) continue;
        ++found;
        AntiTriangularBlocks blocks(random_matrix(rng, n, n), b, c);
        BranchReport r = group_bc_nonsingular(blocks);
        CHECK(r.branch == Branch::GroupInvertible);
        CHECK(r.index == 1);
        Matrix m_full = assemble(blocks);
        CHECK(m_full * *r.drazin * m_full == m_full);
    }
    CHECK(found > 0);
}

TEST_CASE("A nonsingular with BC = 0") {
    Rng rng(131);
    Matrix a = random_invertible(rng, 3);
    AntiTriangularBlocks trivial(a, Matrix::zero(3, 2), Matrix::zero(2, 3));
    BranchReport rep = drazin_a_nonsingular_bc_zero(trivial);
    CHECK(rep.index == 1);
    Matrix expect = Matrix::zero(5, 5);
    expect.paste(0, 0, inverse(a));
    CHECK(rep.drazin == expect);

    for (int t = 0; t < 30; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
        std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
        Matrix inv = random_invertible(rng, n);
        Matrix b = random_matrix(rng, n, m);
        Matrix nb = null_space_basis(b);
        Matrix c = nb.cols() == 0 ? Matrix::zero(m, n)
                                  : Matrix(nb * random_matrix(rng, nb.cols(), n));
        if (!(b * c).is_zero()) continue;
        AntiTriangularBlocks blocks(inv, b, c);
        BranchReport r = drazin_a_nonsingular_bc_zero(blocks);
        CHECK(r.drazin == drazin(assemble(blocks)).inverse);
        CHECK((r.index == 1 || r.index == 2));
        CHECK(r.all_checks_pass());
    }
}

TEST_CASE("B = I case logic") {
    Rng rng(137);
    SUBCASE("invertible C") {
        Matrix c = random_invertible(rng, 3);
        BranchReport rep = index_b_identity(random_matrix(rng, 3, 3), c);
        CHECK(rep.branch == Branch::Invertible);
        CHECK(rep.index == 0);
    }
    SUBCASE("doubly annihilating pair gives the exact index") {
        Matrix a = Matrix::zero(3, 3);
        a(0, 1) = 1;  // diag(J_2, 0)
        Matrix c = Matrix::zero(3, 3);
        c(2, 2) = 1;  // diag(0, 0, 1), idempotent
        REQUIRE((a * c).is_zero());
        REQUIRE((c * a).is_zero());
        BranchReport rep = index_b_identity(a, c);
        CHECK(rep.index == 3);  // max(i(A)+1, 2 i(C)) = max(3, 2)
        Matrix m = block2x2(a, Matrix::identity(3), c, Matrix::zero(3, 3));
        CHECK(drazin_index(m) == 3);
    }
    SUBCASE("zero A with nilpotent C") {
        Matrix c = jordan_block(2);
        BranchReport rep = index_b_identity(Matrix::zero(2, 2), c);
        CHECK(rep.index == 4);  // max(0 + 1, 2 * 2)
    }
}

TEST_CASE("Y matrix from a {1}-inverse projector") {
    DrazinResult r = y_matrix_drazin(jordan_block(2));
    CHECK(r.index == 3);
    CHECK(r.inverse.is_zero());

    Matrix e{{rat(1), rat(0)}, {rat(0), rat(0)}};
    CHECK(y_matrix_drazin(e).index == 1);

    Rng rng(139);
    for (int t = 0; t < 25; ++t) {
        Matrix w = random_singular(rng, static_cast<std::size_t>(rng.uniform(2, 4)));
        DrazinResult viaformula = y_matrix_drazin(w);
        Matrix y = y_matrix(w, one_inverse(w));
        DrazinResult direct = drazin(y);
        CHECK(viaformula.inverse == direct.inverse);
        CHECK(viaformula.index == direct.index);
        CHECK(viaformula.index == 2 * drazin_index(w) - 1);
    }

    Matrix inv = random_invertible(rng, 2);
    CHECK_THROWS_AS(y_matrix_drazin(inv), HypothesisViolated);
}

TEST_CASE("classification dispatch") {
    AntiTriangularBlocks p1 = example_blocks_1();
    BranchReport r1 = classify_and_solve(p1);
    CHECK(r1.branch == Branch::BCZero);
    CHECK(r1.index == 3);

    Rng rng(149);
    Matrix b = random_invertible(rng, 2);
    AntiTriangularBlocks sq(Matrix::zero(2, 2), b, b);
    CHECK(classify_and_solve(sq).branch == Branch::BCNonsingular);

    // generic: make ABC != 0
    int found = 0;
    for (int t = 0; t < 100 && found < 5; ++t) {
        AntiTriangularBlocks blocks = random_singular_pair(rng);
        if ((blocks.a * blocks.w()).is_zero()) continue;
        if (blocks.b.is_identity()) continue;
        ++found;
        BranchReport r = classify_and_solve(blocks);
        CHECK(r.branch == Branch::Generic);
        CHECK(r.lower_bound == *r.index);
        CHECK(r.upper_bound == *r.index);
        CHECK(r.drazin == drazin(assemble(blocks)).inverse);
    }
    CHECK(found > 0);

    // forcing a branch whose hypotheses fail must throw
    CHECK_THROWS_AS(classify_and_solve(sq, Branch::AZero), HypothesisViolated);
    int forced_checked = 0;
    for (int t = 0; t < 100 && forced_checked < 3; ++t) {
        AntiTriangularBlocks blocks = random_singular_pair(rng);
        if ((blocks.a * blocks.w()).is_zero()) continue;
        ++forced_checked;
        CHECK_THROWS_AS(classify_and_solve(blocks, Branch::OrthogonalCase), HypothesisViolated);
    }
    CHECK(forced_checked > 0);
}
