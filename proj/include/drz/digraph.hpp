#ifndef DRZ_DIGRAPH_HPP
#define DRZ_DIGRAPH_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "drz/antitri.hpp"
#include "drz/matrix.hpp"

namespace drz {

struct Arc {
    std::size_t from, to;  // 1-based vertex ids
    Rational weight;       // nonzero
};

struct Digraph {
    std::size_t n = 0;
    std::vector<Arc> arcs;
};

/// Edge-list format: first line "n"; then lines "i j w" (1-based ids, w a
/// rational literal); '#' starts a comment; blank lines are skipped.
/// Throws ParseError / DuplicateArc / ZeroWeight.
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);

/// n x n matrix with entry (i, j) = weight of arc i -> j, else 0.
Matrix adjacency(const Digraph& g);

/// perm maps old id -> new id (1-based bijection). Checks that the index is
/// preserved and the Drazin inverse conjugates: (PAP^-1)^D = P A^D P^-1.
bool similarity_invariance_check(const Digraph& g, const std::vector<std::size_t>& perm);

/// Splits the adjacency matrix of a digraph whose arcs all cross the given
/// partition into [[0, B], [C, 0]] blocks (left vertices first, ascending id).
/// Throws NotBipartiteForPartition / UnequalParts.
AntiTriangularBlocks bipartite_blocks(const Digraph& g, const std::vector<std::size_t>& left);

/// Convenience 2-coloring of the underlying graph; returns a valid left part
/// or throws NotBipartiteForPartition when the graph is not bipartite.
std::vector<std::size_t> discover_bipartition(const Digraph& g);

struct LinkedStarParams {
    // One star per entry; x[i] weights the arcs center -> leaves, y[i] the
    // arcs leaves -> center. All entries strictly positive; x[i], y[i] have
    // equal length.
    std::vector<std::vector<Rational>> x, y;
};

struct DoubleStarParams {
    Rational a, b;                  // weights of the two center-center arcs
    std::vector<Rational> x, y;    // first star: out- and in-weights
    std::vector<Rational> z, w;    // second star
};

/// Blocks of a linked-star digraph: A is the directed center path
/// (A[i][i+1] = 1), B = diag(x_1^T, ..., x_n^T), C = diag(y_1, ..., y_n).
/// BC = diag(x_i^T y_i) is positive diagonal, hence nonsingular.
AntiTriangularBlocks linked_star_blocks(const LinkedStarParams& params);

/// Blocks of a double-star digraph: A = [[0, a], [b, 0]], B = diag(x^T, z^T),
/// C = diag(y, w); requires nonzero entries and x^T y != 0, z^T w != 0.
AntiTriangularBlocks double_star_blocks(const DoubleStarParams& params);

}  // namespace drz

#endif
