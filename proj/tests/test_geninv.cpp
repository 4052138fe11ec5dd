#include <doctest.h>

#include "drz/geninv.hpp"
#include "drz/polynomial.hpp"
#include "drz/randgen.hpp"

using namespace drz;

namespace {

Matrix jordan_block(std::size_t n) {
    Matrix j(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
    return j;
}

// diag([[-2,1],[0,-2]], J_3) from the worked special-sum example
Matrix mixed_core_nilpotent() {
    Matrix a = Matrix::zero(5, 5);
    a(0, 0) = -2;
    a(0, 1) = 1;
    a(1, 1) = -2;
    a(2, 3) = 1;
    a(3, 4) = 1;
    return a;
}

// A block of the first anti-triangular worked example; i(A) = 2
Matrix example_a1() {
    return Matrix{{rat(1, 2), rat(0), rat(0)},
                  {rat(0), rat(2), rat(-2)},
                  {rat(1, 2), rat(2), rat(-2)}};
}

Matrix example_a1_drazin() {
    return Matrix{{rat(2), rat(0), rat(0)}, {rat(-8), rat(0), rat(0)}, {rat(-6), rat(0), rat(0)}};
}

}  // namespace

TEST_CASE("drazin index") {
    Rng rng(31);
    CHECK(drazin_index(random_invertible(rng, 4)) == 0);
    CHECK(drazin_index(jordan_block(3)) == 3);
    CHECK(drazin_index(example_a1()) == 2);
    CHECK_THROWS_AS(drazin_index(Matrix::zero(2, 3)), DimensionMismatch);
}

TEST_CASE("canonical {1}-inverse") {
    Rng rng(37);
    Matrix a = random_invertible(rng, 3);
    CHECK(one_inverse(a) == inverse(a));
    CHECK(one_inverse(Matrix::zero(2, 4)) == Matrix::zero(4, 2));

    Matrix r1{{rat(1), rat(2)}, {rat(2), rat(4)}};
    Matrix x = one_inverse(r1);
    CHECK(r1 * x * r1 == r1);
}

TEST_CASE("{1}-inverse family") {
    Rng rng(41);
    Matrix a = random_singular(rng, 3);
    Matrix canon = one_inverse(a);
    CHECK(one_inverse_family(a, canon, Matrix::zero(3, 3)) == canon);
    CHECK(is_one_inverse(a, one_inverse_family(a, canon, canon)));
    for (int t = 0; t < 200; ++t) {
        Matrix sing = random_singular(rng, static_cast<std::size_t>(rng.uniform(1, 4)));
        Matrix member = random_one_inverse(rng, sing);
        CHECK(is_one_inverse(sing, member));
    }
    CHECK_THROWS_AS(one_inverse_family(a, canon, Matrix::zero(2, 2)), DimensionMismatch);
}

TEST_CASE("core-nilpotent decomposition") {
    Rng rng(43);
    SUBCASE("invertible input has an empty nilpotent part") {
        Matrix a = random_invertible(rng, 3);
        CoreNilpotent cn = core_nilpotent(a);
        CHECK(cn.index == 0);
        CHECK(cn.nil.rows() == 0);
        CHECK(cn.u * block2x2(cn.core, Matrix::zero(3, 0), Matrix::zero(0, 3), cn.nil) *
                  cn.u_inv ==
              a);
    }
    SUBCASE("nilpotent input has an empty core") {
        Matrix n = random_nilpotent(rng, 4);
        CoreNilpotent cn = core_nilpotent(n);
        CHECK(cn.core.rows() == 0);
        CHECK(cn.nil.rows() == 4);
        CHECK(mat_pow(cn.nil, cn.index).is_zero());
    }
    SUBCASE("mixed example splits as expected") {
        Matrix a = mixed_core_nilpotent();
        CoreNilpotent cn = core_nilpotent(a);
        CHECK(cn.index == 3);
        CHECK(cn.core.rows() == 2);
        Polynomial plus_two(std::vector<Rational>{rat(2), rat(1)});
        CHECK(min_poly(cn.core) == plus_two * plus_two);
        CHECK(mat_pow(cn.nil, 3).is_zero());
        CHECK(!mat_pow(cn.nil, 2).is_zero());
        Matrix rebuilt = cn.u *
                         block2x2(cn.core, Matrix::zero(2, 3), Matrix::zero(3, 2), cn.nil) *
                         cn.u_inv;
        CHECK(rebuilt == a);
    }
}

TEST_CASE("drazin inverse") {
    Rng rng(47);
    Matrix a = random_invertible(rng, 3);
    DrazinResult d = drazin(a);
    CHECK(d.index == 0);
    CHECK(d.inverse == inverse(a));

    Matrix n = random_nilpotent(rng, 4);
    DrazinResult dn = drazin(n);
    CHECK(dn.inverse.is_zero());
    CHECK(mat_pow(n, dn.index).is_zero());
    CHECK(!mat_pow(n, dn.index - 1).is_zero());

    CHECK(drazin(example_a1()).inverse == example_a1_drazin());
}

TEST_CASE("group inverse") {
    Matrix e{{rat(1), rat(0)}, {rat(0), rat(0)}};  // idempotent
    CHECK(group_inverse(e) == e);
    Rng rng(53);
    Matrix a = random_invertible(rng, 3);
    CHECK(group_inverse(a) == inverse(a));
    CHECK_THROWS_AS(group_inverse(jordan_block(2)), IndexTooLarge);
}

TEST_CASE("Cline formula") {
    Rng rng(59);
    Matrix a = random_matrix(rng, 3, 3);
    CHECK(cline_drazin(a, Matrix::identity(3)) == drazin(a).inverse);

    // the four-dimensional pair with i(AB) = 3, i(BA) = 2
    Matrix a4{{rat(0), rat(1), rat(0), rat(0)},
              {rat(0), rat(0), rat(0), rat(0)},
              {rat(0), rat(0), rat(0), rat(1)},
              {rat(0), rat(0), rat(0), rat(0)}};
    Matrix b4{{rat(0), rat(1), rat(0), rat(0)},
              {rat(0), rat(0), rat(1), rat(0)},
              {rat(0), rat(0), rat(0), rat(0)},
              {rat(0), rat(0), rat(0), rat(1)}};
    CHECK(drazin_index(a4 * b4) == 3);
    CHECK(drazin_index(b4 * a4) == 2);
    CHECK(cline_drazin(a4, b4) == drazin(a4 * b4).inverse);

    for (int t = 0; t < 20; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        std::size_t m = static_cast<std::size_t>(rng.uniform(1, 4));
        Matrix x = random_matrix(rng, n, m);
        Matrix y = random_matrix(rng, m, n);
        CHECK(cline_drazin(x, y) == drazin(x * y).inverse);
    }
}

TEST_CASE("special sum") {
    Rng rng(61);
    Matrix a = random_invertible(rng, 3);
    CHECK(special_sum(a, inverse(a)) == a);

    for (int t = 0; t < 20; ++t) {
        Matrix s = random_singular(rng, static_cast<std::size_t>(rng.uniform(1, 5)));
        CHECK(drazin_index(special_sum(s, one_inverse(s))) == drazin_index(s) - 1);
    }
    CHECK_THROWS_AS(special_sum(example_a1(), Matrix::zero(3, 3)), HypothesisViolated);
}

TEST_CASE("drazin via the special sum") {
    Rng rng(67);
    Matrix n = random_nilpotent(rng, 3);
    CHECK(drazin_via_special_sum(n, one_inverse(n)).is_zero());

    Matrix a1 = example_a1();
    CHECK(drazin_via_special_sum(a1, one_inverse(a1)) == example_a1_drazin());

    for (int t = 0; t < 200; ++t) {
        Matrix s = random_singular(rng, static_cast<std::size_t>(rng.uniform(1, 4)));
        Matrix member = random_one_inverse(rng, s);
        CHECK(drazin_via_special_sum(s, member) == drazin(s).inverse);
    }
}

TEST_CASE("orthogonal additive formula") {
    Rng rng(71);
    Matrix x = random_matrix(rng, 3, 3);
    DrazinResult direct = drazin(x);
    DrazinResult sum = additive_drazin_orthogonal(x, Matrix::zero(3, 3));
    CHECK(sum.inverse == direct.inverse);

    // diag(J_2, 0, 0) + diag(0, 0, 0, E): disjoint supports, index 2
    Matrix xx = Matrix::zero(4, 4);
    xx(0, 1) = 1;
    Matrix yy = Matrix::zero(4, 4);
    yy(3, 3) = 1;
    DrazinResult r = additive_drazin_orthogonal(xx, yy);
    CHECK(r.index == 2);
    CHECK(r.inverse == drazin(xx + yy).inverse);

    for (int t = 0; t < 30; ++t) {
        auto [p, q] = random_orthogonal_pair(rng, static_cast<std::size_t>(rng.uniform(2, 5)));
        DrazinResult viaformula = additive_drazin_orthogonal(p, q);
        CHECK(viaformula.inverse == drazin(p + q).inverse);
    }

    Matrix bad = Matrix::identity(3);
    CHECK_THROWS_AS(additive_drazin_orthogonal(bad, bad), OrthogonalityViolated);
}

TEST_CASE("one-sided additive formula") {
    SUBCASE("when both products vanish it matches the orthogonal route") {
        Rng rng(73);
        for (int t = 0; t < 10; ++t) {
            auto [x, y] = random_orthogonal_pair(rng, 3);
            CHECK(additive_drazin_oneside(x, y) ==
                  additive_drazin_orthogonal(x, y).inverse);
        }
    }
    SUBCASE("XY = 0 with YX != 0") {
        Matrix x{{rat(0), rat(0)}, {rat(0), rat(1)}};
        Matrix y{{rat(0), rat(1)}, {rat(0), rat(0)}};
        REQUIRE((x * y).is_zero());
        REQUIRE(!(y * x).is_zero());
        CHECK(additive_drazin_oneside(x, y) == drazin(x + y).inverse);
        CHECK_THROWS_AS(additive_drazin_oneside(y, x), OrthogonalityViolated);
    }
    SUBCASE("random annihilating pairs") {
        Rng rng(79);
        for (int t = 0; t < 200; ++t) {
            auto [x, y] = random_oneside_pair(rng, static_cast<std::size_t>(rng.uniform(2, 4)));
            CHECK(additive_drazin_oneside(x, y) == drazin(x + y).inverse);
        }
    }
}
