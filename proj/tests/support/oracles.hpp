#pragma once

// Brute-force reference implementations. Slow, obvious, and independent of the
// library algorithms they check.

#include "poramsey/graph.hpp"
#include "poramsey/poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using poramsey::Graph;
using poramsey::Poset;
using poramsey::Vertex;

inline std::vector<Vertex> members(std::uint32_t mask)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; mask >> v; ++v)
        if ((mask >> v) & 1U)
            out.push_back(v);
    return out;
}

/// Largest vertex subset whose pairs all satisfy `want` adjacency; n <= 22.
inline std::size_t best_subset(const Graph & g, bool want)
{
    const auto n = g.size();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        auto vs = members(mask);
        if (vs.size() <= best)
            continue;
        bool ok = true;
        for (std::size_t i = 0; i < vs.size() && ok; ++i)
            for (std::size_t j = i + 1; j < vs.size() && ok; ++j)
                ok = g.adjacent(vs[i], vs[j]) == want;
        if (ok)
            best = vs.size();
    }
    return best;
}

inline std::size_t clique_number(const Graph & g) { return best_subset(g, true); }
inline std::size_t independence_number(const Graph & g) { return best_subset(g, false); }

inline std::size_t domination_number(const Graph & g)
{
    const auto n = g.size();
    std::size_t best = n;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        auto vs = members(mask);
        if (vs.size() >= best)
            continue;
        std::vector<bool> covered(n, false);
        for (auto v : vs) {
            covered[v] = true;
            for (Vertex u = 0; u < n; ++u)
                if (g.adjacent(u, v))
                    covered[u] = true;
        }
        if (std::all_of(covered.begin(), covered.end(), [](bool c) { return c; }))
            best = vs.size();
    }
    return best;
}

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max() / 4;

/// All-pairs shortest paths by Floyd-Warshall.
inline std::vector<std::vector<std::size_t>> all_distances(const Graph & g)
{
    const auto n = g.size();
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, unreachable));
    for (Vertex a = 0; a < n; ++a) {
        d[a][a] = 0;
        for (Vertex b = 0; b < n; ++b)
            if (g.adjacent(a, b))
                d[a][b] = 1;
    }
    for (Vertex k = 0; k < n; ++k)
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = 0; b < n; ++b)
                d[a][b] = std::min(d[a][b], d[a][k] + d[k][b]);
    return d;
}

/// Max finite-or-not distance; unreachable when disconnected.
inline std::size_t diameter(const Graph & g)
{
    std::size_t out = 0;
    for (auto & row : all_distances(g))
        for (auto x : row)
            out = std::max(out, x);
    return out;
}

/// Shortest cycle through each edge: drop the edge, BFS between its ends.
inline std::size_t girth(const Graph & g)
{
    std::size_t best = unreachable;
    for (auto [a, b] : g.edges()) {
        Graph h = g;
        h.remove_edge(a, b);
        auto d = all_distances(h);
        if (d[a][b] < unreachable)
            best = std::min(best, d[a][b] + 1);
    }
    return best;
}

/// a | b in Z_n by trying every multiplier.
inline bool multiplier_divides(std::uint64_t n, std::uint64_t a, std::uint64_t b)
{
    for (std::uint64_t x = 0; x < n; ++x)
        if (a * x % n == b)
            return true;
    return false;
}

/// Counts labeled posets by trying every strict relation; order <= 5.
inline std::uint64_t count_posets_by_relations(std::size_t order)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < order; ++a)
        for (Vertex b = 0; b < order; ++b)
            if (a != b)
                pairs.emplace_back(a, b);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs.size()); ++code) {
        std::vector<std::vector<bool>> lt(order, std::vector<bool>(order, false));
        for (std::size_t t = 0; t < pairs.size(); ++t)
            if ((code >> t) & 1U)
                lt[pairs[t].first][pairs[t].second] = true;
        bool ok = true;
        for (Vertex a = 0; a < order && ok; ++a)
            for (Vertex b = 0; b < order && ok; ++b) {
                if (lt[a][b] && lt[b][a])
                    ok = false;
                for (Vertex c = 0; c < order && ok; ++c)
                    if (lt[a][b] && lt[b][c] && ! lt[a][c])
                        ok = false;
            }
        count += ok ? 1 : 0;
    }
    return count;
}

/// True when every vertex subset of size r has the clique or independent target.
inline bool every_subset_hits(const Graph & g, std::size_t r, std::size_t n, std::size_t m)
{
    for (std::uint32_t mask = 0; mask < (1U << g.size()); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != r)
            continue;
        auto h = poramsey::induced_subgraph(g, members(mask));
        if (oracle::clique_number(h) < n && oracle::independence_number(h) < m)
            return false;
    }
    return true;
}

} // namespace oracle

namespace gen {

/// Random DAG along a hidden random permutation, then transitive closure.
inline poramsey::Poset random_poset(std::mt19937_64 & rng, std::size_t size, double density)
{
    std::vector<poramsey::Vertex> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution coin(density);

    std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
    for (std::size_t i = 0; i < size; ++i) {
        leq[perm[i]][perm[i]] = true;
        for (std::size_t j = i + 1; j < size; ++j)
            if (coin(rng))
                leq[perm[i]][perm[j]] = true;
    }
    for (std::size_t k = 0; k < size; ++k)
        for (std::size_t a = 0; a < size; ++a)
            if (leq[a][k])
                for (std::size_t b = 0; b < size; ++b)
                    if (leq[k][b])
                        leq[a][b] = true;
    return poramsey::validate_poset(leq);
}

inline poramsey::Graph random_graph(std::mt19937_64 & rng, std::size_t size, double density)
{
    std::bernoulli_distribution coin(density);
    poramsey::Graph g(size);
    for (poramsey::Vertex a = 0; a < size; ++a)
        for (poramsey::Vertex b = a + 1; b < size; ++b)
            if (coin(rng))
                g.add_edge(a, b);
    return g;
}

} // namespace gen
