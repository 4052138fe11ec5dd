#include <doctest.h>

#include "drz/digraph.hpp"
#include "drz/geninv.hpp"
#include "drz/randgen.hpp"

using namespace drz;

TEST_CASE("edge-list parsing") {
    Digraph g = parse_digraph("2\n1 2 1\n");
    CHECK(g.n == 2);
    REQUIRE(g.arcs.size() == 1);
    CHECK(g.arcs[0].from == 1);
    CHECK(g.arcs[0].to == 2);
    CHECK(g.arcs[0].weight == 1);

    Digraph path = parse_digraph("3\n1 2 1/2\n2 3 -3\n");
    CHECK(path.arcs.size() == 2);
    CHECK(path.arcs[0].weight == rat(1, 2));
    CHECK(path.arcs[1].weight == rat(-3));

    Digraph commented = parse_digraph("# header\n3\n\n1 2 1 # loop arc\n");
    CHECK(commented.arcs.size() == 1);

    CHECK_THROWS_AS(parse_digraph("2\n1 2 1\n1 2 3\n"), DuplicateArc);
    CHECK_THROWS_AS(parse_digraph("2\n1 2 0\n"), ZeroWeight);
    CHECK_THROWS_AS(parse_digraph("2\n1 5 1\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph(""), ParseError);
}

TEST_CASE("adjacency") {
    Digraph empty;
    empty.n = 3;
    CHECK(adjacency(empty) == Matrix::zero(3, 3));

    Digraph loop = parse_digraph("3\n1 1 5\n");
    Matrix al = adjacency(loop);
    CHECK(al(0, 0) == 5);
    CHECK(rank(al) == 1);

    // 3-cycle with unit weights is the cyclic permutation matrix
    Digraph cyc = parse_digraph("3\n1 2 1\n2 3 1\n3 1 1\n");
    Matrix ac = adjacency(cyc);
    Matrix expect(3, 3);
    expect(0, 1) = 1;
    expect(1, 2) = 1;
    expect(2, 0) = 1;
    CHECK(ac == expect);
    CHECK(drazin_index(ac) == 0);
}

TEST_CASE("permutation similarity invariance") {
    Digraph cyc = parse_digraph("3\n1 2 1\n2 3 1\n3 1 1\n");
    CHECK(similarity_invariance_check(cyc, {1, 2, 3}));
    CHECK(similarity_invariance_check(cyc, {2, 3, 1}));
    CHECK(similarity_invariance_check(cyc, {3, 1, 2}));
    CHECK(similarity_invariance_check(cyc, {2, 1, 3}));

    CHECK_THROWS_AS(similarity_invariance_check(cyc, {1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(similarity_invariance_check(cyc, {1, 2}), std::invalid_argument);
}

TEST_CASE("bipartite block extraction") {
    Digraph k2 = parse_digraph("2\n1 2 1\n2 1 1\n");
    AntiTriangularBlocks blocks = bipartite_blocks(k2, {1});
    CHECK(blocks.b == Matrix::identity(1));
    CHECK(blocks.c == Matrix::identity(1));
    CHECK(blocks.a.is_zero());

    Digraph bad = parse_digraph("4\n1 2 1\n1 3 1\n");
    CHECK_THROWS_AS(bipartite_blocks(bad, {1, 3}), NotBipartiteForPartition);
    CHECK_THROWS_AS(bipartite_blocks(bad, {1}), UnequalParts);

    // weighted 4-vertex bipartite graph: reassembly equals the reordered adjacency
    Digraph g = parse_digraph("4\n1 3 1/2\n1 4 -1\n2 3 2\n4 2 -1/3\n");
    AntiTriangularBlocks bb = bipartite_blocks(g, {1, 2});
    Matrix m = assemble(bb);
    Matrix a = adjacency(g);
    // partition order (1,2 | 3,4) coincides with vertex order here
    CHECK(m == a);
    CHECK(discover_bipartition(g) == std::vector<std::size_t>{1, 2});

    Digraph triangle = parse_digraph("3\n1 2 1\n2 3 1\n3 1 1\n");
    CHECK_THROWS_AS(discover_bipartition(triangle), NotBipartiteForPartition);
}

TEST_CASE("linked-star construction") {
    LinkedStarParams one;
    one.x = {{rat(1)}};
    one.y = {{rat(1)}};
    AntiTriangularBlocks b1 = linked_star_blocks(one);
    CHECK(b1.w() == Matrix::identity(1));
    BranchReport r1 = classify_and_solve(b1);
    CHECK(*r1.index <= 1);

    LinkedStarParams two;
    two.x = {{rat(1), rat(1)}, {rat(1), rat(1)}};
    two.y = two.x;
    AntiTriangularBlocks b2 = linked_star_blocks(two);
    Matrix expect_w(2, 2);
    expect_w(0, 0) = 2;
    expect_w(1, 1) = 2;
    CHECK(b2.w() == expect_w);
    CHECK(b2.a(0, 1) == 1);  // linked centers

    BranchReport r2 = classify_and_solve(b2);
    CHECK(r2.branch == Branch::BCNonsingular);
    CHECK(r2.index == 1);
    // leaves make B and C rectangular, so the group case (not invertible) applies
    BranchReport direct = group_bc_nonsingular(b2);
    CHECK(direct.branch == Branch::GroupInvertible);

    LinkedStarParams bad;
    bad.x = {{rat(1), rat(-1)}};
    bad.y = {{rat(1), rat(1)}};
    CHECK_THROWS_AS(linked_star_blocks(bad), NonPositiveVector);
}

TEST_CASE("double-star construction") {
    DoubleStarParams detached;
    detached.a = rat(0);
    detached.b = rat(0);
    detached.x = {rat(1), rat(1)};
    detached.y = {rat(1), rat(2)};
    detached.z = {rat(2)};
    detached.w = {rat(-1)};
    AntiTriangularBlocks blocks = double_star_blocks(detached);
    BranchReport rep = classify_and_solve(blocks);
    CHECK(rep.branch == Branch::BCNonsingular);
    CHECK(*rep.index <= 1);

    DoubleStarParams linked;
    linked.a = rat(1);
    linked.b = rat(2);
    linked.x = {rat(1), rat(1)};
    linked.y = {rat(1), rat(1)};
    linked.z = {rat(1), rat(-1), rat(1)};
    linked.w = {rat(1), rat(-1), rat(1)};
    AntiTriangularBlocks lb = double_star_blocks(linked);
    BranchReport lr = classify_and_solve(lb);
    CHECK(lr.index == 1);
    Matrix m = assemble(lb);
    CHECK(m * *lr.drazin * m == m);
    CHECK(*lr.drazin * m * *lr.drazin == *lr.drazin);
    CHECK(m * *lr.drazin == *lr.drazin * m);

    DoubleStarParams degenerate = linked;
    degenerate.x = {rat(1), rat(1)};
    degenerate.y = {rat(1), rat(-1)};
    CHECK_THROWS_AS(double_star_blocks(degenerate), ZeroInnerProduct);

    DoubleStarParams zero_entry = linked;
    zero_entry.z = {rat(1), rat(0), rat(1)};
    CHECK_THROWS_AS(double_star_blocks(zero_entry), ZeroEntry);
}
