#include "drz/worked_examples.hpp"

#include "drz/antitri.hpp"
#include "drz/geninv.hpp"
#include "drz/polynomial.hpp"

namespace drz {

namespace {


struct Checker {
    ExampleResult& out;
    void operator()(const std::string& what, bool ok) {
        out.details.push_back(what + ": " + (ok ? "pass" : "FAIL"));
        if (!ok) out.pass = false;
    }
};

Polynomial lambda_power(std::size_t k) { return Polynomial::power(k); }

Polynomial linear(long c0, long c1 = 1) {
    return Polynomial(std::vector<Rational>{rat(c0), rat(c1)});
}

// psi = l^2
const Polynomial kLambdaSq = lambda_power(2);

void example_nilpotent_products(ExampleResult& res, bool tamper) {
    Checker check{res};
    Matrix a{{rat(0), rat(1), rat(0), rat(0)},
             {rat(0), rat(0), rat(0), rat(0)},
             {rat(0), rat(0), rat(0), rat(1)},
             {rat(0), rat(0), rat(0), rat(0)}};
    Matrix b{{rat(0), rat(1), rat(0), rat(0)},
             {rat(0), rat(0), rat(1), rat(0)},
             {rat(0), rat(0), rat(0), rat(0)},
             {rat(0), rat(0), rat(0), rat(1)}};
    Matrix c{{rat(0), rat(1), rat(0), rat(0)},
             {rat(0), rat(0), rat(1), rat(0)},
             {rat(0), rat(0), rat(0), rat(0)},
             {rat(0), rat(0), rat(0), rat(0)}};
    Polynomial cube = lambda_power(tamper ? 2 : 3);
    check("psi(BA) = l^2", min_poly(b * a) == kLambdaSq);
    check("psi(AC) = l^2", min_poly(a * c) == kLambdaSq);
    check("psi(CA) = l^2", min_poly(c * a) == kLambdaSq);
    check("psi(AB) = l^3", min_poly(a * b) == cube);
    check("(AB)^3 = 0 != (AB)^2",
          mat_pow(a * b, 3).is_zero() && !mat_pow(a * b, 2).is_zero());
}

void example_shifted_minpolys(ExampleResult& res) {
    Checker check{res};
    Matrix a{{rat(0), rat(1), rat(0), rat(0), rat(0)},
             {rat(0), rat(0), rat(1), rat(0), rat(0)},
             {rat(0), rat(0), rat(0), rat(0), rat(0)},
             {rat(0), rat(0), rat(0), rat(-1), rat(0)},
             {rat(0), rat(0), rat(0), rat(-2), rat(2)}};
    Matrix b{{rat(0), rat(1), rat(0), rat(0), rat(0)},
             {rat(0), rat(0), rat(0), rat(0), rat(0)},
             {rat(0), rat(0), rat(0), rat(0), rat(0)},
             {rat(0), rat(0), rat(-1), rat(-1), rat(0)},
             {rat(0), rat(0), rat(0), rat(0), rat(-3)}};
    Matrix id = Matrix::identity(5);
    Matrix iab = id - a * b;
    Matrix iba = id - b * a;
    Polynomial expected_ab = linear(-7) * linear(-1) * lambda_power(1);
    Polynomial expected_ba = linear(-7) * lambda_power(1) * linear(-1) * linear(-1);
    check("psi(I-AB) = (l-7)(l-1)l", min_poly(iab) == expected_ab);
    check("psi(I-BA) = (l-7)l(l-1)^2", min_poly(iba) == expected_ba);
    check("i(I-AB) = 1", drazin_index(iab) == 1);
    check("i(I-BA) = 1", drazin_index(iba) == 1);
}

void example_special_sum(ExampleResult& res) {
    Checker check{res};
    Matrix core{{rat(-2), rat(1)}, {rat(0), rat(-2)}};
    Matrix nil{{rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}, {rat(0), rat(0), rat(0)}};
    Matrix a = Matrix::zero(5, 5);
    a.paste(0, 0, core);
    a.paste(2, 2, nil);
    Matrix a_one = Matrix::zero(5, 5);
    a_one.paste(0, 0, inverse(core));
    a_one.paste(2, 2, nil.transpose());

    Matrix s = special_sum(a, a_one);
    Matrix expected_s{{rat(-2), rat(1), rat(0), rat(0), rat(0)},
                      {rat(0), rat(-2), rat(0), rat(0), rat(0)},
                      {rat(0), rat(0), rat(0), rat(1), rat(0)},
                      {rat(0), rat(0), rat(0), rat(0), rat(0)},
                      {rat(0), rat(0), rat(0), rat(0), rat(1)}};
    check("A^2A^- + I - AA^- matches the displayed matrix", s == expected_s);

    Polynomial plus_two_sq = linear(2) * linear(2);
    check("psi(A) = (l+2)^2 l^3", min_poly(a) == plus_two_sq * lambda_power(3));
    check("psi(S) = (l-1) l^2 (l+2)^2",
          min_poly(s) == linear(-1) * lambda_power(2) * plus_two_sq);
    check("i(A) = 3", drazin_index(a) == 3);
    check("i(S) = 2", drazin_index(s) == 2);
    check("A^D = (S^D)^2 A", drazin_via_special_sum(a, a_one) == drazin(a).inverse);
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

void example_anti_triangular_1(ExampleResult& res) {
    Checker check{res};
    AntiTriangularBlocks blocks = example_blocks_1();
    check("BC = 0", blocks.w().is_zero());
    check("i(A) = 2", drazin_index(blocks.a) == 2);

    Matrix expected_ad{{rat(2), rat(0), rat(0)}, {rat(-8), rat(0), rat(0)},
                       {rat(-6), rat(0), rat(0)}};
    check("A^D matches the displayed matrix", drazin(blocks.a).inverse == expected_ad);

    BranchReport rep = classify_and_solve(blocks);
    check("branch is BCZero", rep.branch == Branch::BCZero);
    check("i(M) = 3 = i(A) + 1", rep.index == 3);

    long rows[9][9] = {
        {2, 0, 0, 4, -2, -8, -2, -4, 2},
        {-8, 0, 0, -16, 8, 32, 8, 16, -8},
        {-6, 0, 0, -12, 6, 24, 6, 12, -6},
        {4, 0, 0, 8, -4, -16, -4, -8, 4},
        {-16, 0, 0, -32, 16, 64, 16, 32, -16},
        {-12, 0, 0, -24, 12, 48, 12, 24, -12},
        {0, 0, 0, 0, 0, 0, 0, 0, 0},
        {38, 0, 0, 76, -38, -152, -38, -76, 38},
        {4, 0, 0, 8, -4, -16, -4, -8, 4},
    };
    Matrix expected_md(9, 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) expected_md(i, j) = rat(rows[i][j]);
    check("M^D matches the displayed 9x9 matrix, every entry",
          rep.drazin && *rep.drazin == expected_md);
}

void example_anti_triangular_2(ExampleResult& res) {
    Checker check{res};
    Matrix a{{rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}, {rat(0), rat(0), rat(0)}};
    Matrix b{{rat(3), rat(0), rat(0), rat(0), rat(0)},
             {rat(1), rat(0), rat(0), rat(0), rat(0)},
             {rat(0), rat(0), rat(0), rat(0), rat(0)}};
    Matrix c{{rat(0), rat(0), rat(0)},
             {rat(0), rat(1), rat(4)},
             {rat(0), rat(0), rat(0)},
             {rat(0), rat(0), rat(0)},
             {rat(0), rat(0), rat(0)}};
    AntiTriangularBlocks blocks(std::move(a), std::move(b), std::move(c));
    check("BC = 0", blocks.w().is_zero());
    check("i(A) = 3", drazin_index(blocks.a) == 3);
    BranchReport rep = classify_and_solve(blocks);
    check("branch is BCZero", rep.branch == Branch::BCZero);
    check("i(M) = 3 = i(A), lower bound attained", rep.index == 3);
}

void example_anti_triangular_3(ExampleResult& res) {
    Checker check{res};
    Matrix a{{rat(1), rat(-1), rat(1)}, {rat(1), rat(2), rat(0)}, {rat(2), rat(1), rat(1)}};
    Matrix b{{rat(-1), rat(0), rat(-1), rat(-1, 2)},
             {rat(0), rat(0), rat(0), rat(0)},
             {rat(0), rat(0), rat(0), rat(0)}};
    Matrix c{{rat(1), rat(0), rat(0)},
             {rat(0), rat(0), rat(0)},
             {rat(0), rat(0), rat(0)},
             {rat(-2), rat(0), rat(0)}};
    AntiTriangularBlocks blocks(std::move(a), std::move(b), std::move(c));
    check("BC = 0", blocks.w().is_zero());
    check("i(A) = 1", drazin_index(blocks.a) == 1);
    BranchReport rep = classify_and_solve(blocks);
    check("branch is BCZero", rep.branch == Branch::BCZero);
    check("i(M) = 3 = i(A) + 2, upper bound attained", rep.index == 3);
}

}  // namespace

std::vector<ExampleResult> run_worked_examples(bool tamper) {
    std::vector<ExampleResult> results;
    results.push_back(ExampleResult{"nilpotent-product-minpolys", true, {}});
    example_nilpotent_products(results.back(), tamper);
    results.push_back(ExampleResult{"shifted-minpolys-equal-index", true, {}});
    example_shifted_minpolys(results.back());
    results.push_back(ExampleResult{"special-sum-and-minpoly", true, {}});
    example_special_sum(results.back());
    results.push_back(ExampleResult{"anti-triangular-index-up-one", true, {}});
    example_anti_triangular_1(results.back());
    results.push_back(ExampleResult{"anti-triangular-index-equal", true, {}});
    example_anti_triangular_2(results.back());
    results.push_back(ExampleResult{"anti-triangular-index-up-two", true, {}});
    example_anti_triangular_3(results.back());
    return results;
}

}  // namespace drz
