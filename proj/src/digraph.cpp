#include "drz/digraph.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "drz/geninv.hpp"

namespace drz {

namespace {

long parse_long(const std::string& tok) {
    std::size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing characters in '" + tok + "'");
    return v;
}

}  // namespace

Digraph parse_digraph(std::istream& in) {
    Digraph g;
    std::string line;
    int lineno = 0;
    bool have_n = false;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank or comment-only
        if (!have_n) {
            try {
                long n = parse_long(tok);
                if (n < 0) throw ParseError(lineno, "negative vertex count");
                g.n = static_cast<std::size_t>(n);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                throw ParseError(lineno, "expected vertex count, got '" + tok + "'");
            }
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after vertex count");
            have_n = true;
            continue;
        }
        std::string jtok, wtok;
        if (!(ls >> jtok >> wtok)) throw ParseError(lineno, "expected 'i j w'");
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens after arc");
        long i, j;
        try {
            i = parse_long(tok);
            j = parse_long(jtok);
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad vertex id");
        }
        if (i < 1 || j < 1 || static_cast<std::size_t>(i) > g.n ||
            static_cast<std::size_t>(j) > g.n)
            throw ParseError(lineno, "vertex id out of range 1.." + std::to_string(g.n));
        Rational w;
        try {
            w = parse_rational(wtok);
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
        if (w == 0) throw ZeroWeight("line " + std::to_string(lineno) + ": zero arc weight");
        auto key = std::make_pair(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        if (!seen.insert(key).second)
            throw DuplicateArc("line " + std::to_string(lineno) + ": duplicate arc " +
                               std::to_string(i) + " -> " + std::to_string(j));
        g.arcs.push_back(Arc{key.first, key.second, w});
    }
    if (!have_n) throw ParseError(lineno == 0 ? 1 : lineno, "missing vertex count line");
    return g;
}

Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

Matrix adjacency(const Digraph& g) {
    Matrix a(g.n, g.n);
    for (const Arc& arc : g.arcs) a(arc.from - 1, arc.to - 1) = arc.weight;
    return a;
}

bool similarity_invariance_check(const Digraph& g, const std::vector<std::size_t>& perm) {
    if (perm.size() != g.n) throw std::invalid_argument("permutation has wrong length");
    std::vector<bool> hit(g.n, false);
    for (std::size_t v : perm) {
        if (v < 1 || v > g.n || hit[v - 1])
            throw std::invalid_argument("not a permutation of 1..n");
        hit[v - 1] = true;
    }
    Matrix a = adjacency(g);
    Matrix p(g.n, g.n);
    for (std::size_t i = 0; i < g.n; ++i) p(perm[i] - 1, i) = 1;
    Matrix conj = p * a * p.transpose();  // P^-1 = P^T for a permutation

    if (drazin_index(a) != drazin_index(conj)) return false;
    DrazinResult da = drazin(a);
    DrazinResult dc = drazin(conj);
    return dc.inverse == p * da.inverse * p.transpose();
}

AntiTriangularBlocks bipartite_blocks(const Digraph& g, const std::vector<std::size_t>& left) {
    std::vector<bool> in_left(g.n + 1, false);
    for (std::size_t v : left) {
        if (v < 1 || v > g.n) throw std::invalid_argument("left-part vertex out of range");
        in_left[v] = true;
    }
    std::size_t nleft = left.size();
    if (2 * nleft != g.n)
        throw UnequalParts("left part has " + std::to_string(nleft) + " of " +
                           std::to_string(g.n) + " vertices; parts must be equal");

    // positions: left vertices first (ascending id), then the rest
    std::vector<std::size_t> pos(g.n + 1, 0);
    std::size_t next = 0;
    for (std::size_t v = 1; v <= g.n; ++v)
        if (in_left[v]) pos[v] = next++;
    for (std::size_t v = 1; v <= g.n; ++v)
        if (!in_left[v]) pos[v] = next++;

    Matrix b(nleft, nleft), c(nleft, nleft);
    for (const Arc& arc : g.arcs) {
        bool from_left = in_left[arc.from], to_left = in_left[arc.to];
        if (from_left == to_left)
            throw NotBipartiteForPartition("arc " + std::to_string(arc.from) + " -> " +
                                           std::to_string(arc.to) +
                                           " does not cross the partition");
        if (from_left)
            b(pos[arc.from], pos[arc.to] - nleft) = arc.weight;
        else
            c(pos[arc.from] - nleft, pos[arc.to]) = arc.weight;
    }
    return AntiTriangularBlocks(Matrix::zero(nleft, nleft), std::move(b), std::move(c));
}

std::vector<std::size_t> discover_bipartition(const Digraph& g) {
    // 2-color the underlying undirected graph, components one by one.
    std::vector<int> color(g.n + 1, -1);
    std::vector<std::vector<std::size_t>> adj(g.n + 1);
    for (const Arc& arc : g.arcs) {
        adj[arc.from].push_back(arc.to);
        adj[arc.to].push_back(arc.from);
    }
    for (std::size_t s = 1; s <= g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t v = queue.back();
            queue.pop_back();
            for (std::size_t u : adj[v]) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    throw NotBipartiteForPartition("graph has an odd cycle through vertex " +
                                                   std::to_string(u));
                }
            }
        }
    }
    std::vector<std::size_t> left;
    for (std::size_t v = 1; v <= g.n; ++v)
        if (color[v] == 0) left.push_back(v);
    return left;
}

AntiTriangularBlocks linked_star_blocks(const LinkedStarParams& params) {
    std::size_t n = params.x.size();
    if (params.y.size() != n || n == 0)
        throw std::invalid_argument("linked star needs matching nonempty x, y lists");
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (params.x[i].size() != params.y[i].size() || params.x[i].empty())
            throw std::invalid_argument("star " + std::to_string(i + 1) +
                                        ": x and y must be nonempty of equal length");
        for (const Rational& v : params.x[i])
            if (v <= 0) throw NonPositiveVector("x vectors must be strictly positive");
        for (const Rational& v : params.y[i])
            if (v <= 0) throw NonPositiveVector("y vectors must be strictly positive");
        total += params.x[i].size();
    }

    Matrix a(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) a(i, i + 1) = 1;  // center path
    Matrix b(n, total), c(total, n);
    std::size_t off = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < params.x[i].size(); ++j) {
            b(i, off + j) = params.x[i][j];
            c(off + j, i) = params.y[i][j];
        }
        off += params.x[i].size();
    }
    return AntiTriangularBlocks(std::move(a), std::move(b), std::move(c));
}

AntiTriangularBlocks double_star_blocks(const DoubleStarParams& params) {
    if (params.x.size() != params.y.size() || params.z.size() != params.w.size() ||
        params.x.empty() || params.z.empty())
        throw std::invalid_argument("double star needs nonempty x/y and z/w of equal lengths");
    for (const auto* vec : {&params.x, &params.y, &params.z, &params.w})
        for (const Rational& v : *vec)
            if (v == 0) throw ZeroEntry("double-star vectors must have nonzero entries");

    Rational xy(0), zw(0);
    for (std::size_t i = 0; i < params.x.size(); ++i) xy += params.x[i] * params.y[i];
    for (std::size_t i = 0; i < params.z.size(); ++i) zw += params.z[i] * params.w[i];
    if (xy == 0) throw ZeroInnerProduct("x^T y = 0");
    if (zw == 0) throw ZeroInnerProduct("z^T w = 0");

    Matrix a(2, 2);
    a(0, 1) = params.a;
    a(1, 0) = params.b;
    std::size_t p = params.x.size(), q = params.z.size();
    Matrix b(2, p + q), c(p + q, 2);
    for (std::size_t j = 0; j < p; ++j) {
        b(0, j) = params.x[j];
        c(j, 0) = params.y[j];
    }
    for (std::size_t j = 0; j < q; ++j) {
        b(1, p + j) = params.z[j];
        c(p + j, 1) = params.w[j];
    }
    return AntiTriangularBlocks(std::move(a), std::move(b), std::move(c));
}

}  // namespace drz
