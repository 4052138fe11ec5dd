#include <doctest.h>

#include "drz/randgen.hpp"
#include "drz/textio.hpp"

using namespace drz;

TEST_CASE("rational literals") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational("1/2") == rat(1, 2));
    CHECK(parse_rational("-4/6") == rat(-2, 3));
    CHECK(parse_rational("2/-4") == rat(-1, 2));
    CHECK(to_string(rat(-2, 3)) == "-2/3");
    CHECK(to_string(rat(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("matrix text format") {
    Matrix m = parse_matrix("2 3\n1 -2 1/2\n0 3/4 -5\n");
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m(0, 2) == rat(1, 2));
    CHECK(m(1, 1) == rat(3, 4));

    CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n3\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("junk\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
    CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n3 x\n"), ParseError);
}

TEST_CASE("matrix JSON format") {
    Matrix m = parse_matrix(R"({"rows":2,"cols":2,"entries":[["1","-1/2"],[0,3]]})");
    CHECK(m(0, 1) == rat(-1, 2));
    CHECK(m(1, 0) == 0);
    CHECK(m(1, 1) == 3);
    CHECK_THROWS_AS(parse_matrix(R"({"rows":2})"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows":1,"cols":1,"entries":[[1.5]]})"), ParseError);
}

TEST_CASE("round trips") {
    Rng rng(151);
    for (int t = 0; t < 25; ++t) {
        std::size_t r = static_cast<std::size_t>(rng.uniform(1, 5));
        std::size_t c = static_cast<std::size_t>(rng.uniform(1, 5));
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = rat(rng.uniform(-20, 20), rng.uniform(1, 9));
        CHECK(parse_matrix(matrix_to_text(m)) == m);
        CHECK(parse_matrix(matrix_to_json(m)) == m);
    }
}

TEST_CASE("blocks files") {
    std::string text =
        "2 2\n0 1\n0 0\n"
        "\n"
        "2 1\n1\n0\n"
        "\n"
        "1 2\n0 1\n";
    AntiTriangularBlocks blocks = parse_blocks(text);
    CHECK(blocks.n() == 2);
    CHECK(blocks.m() == 1);
    CHECK(blocks.b(0, 0) == 1);

    CHECK_THROWS_AS(parse_blocks("1 1\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_blocks("1 1\n1\n\n1 1\n2\n"), ParseError);
}
