#include "poramsey/poset.hpp"

#include "poramsey/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace poramsey {

namespace {

std::string pair_str(Vertex a, Vertex b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

} // namespace

Poset Poset::from_trusted(BitMatrix leq) { return Poset(std::move(leq)); }

Poset validate_poset(BitMatrix leq)
{
    const auto n = leq.size();
    if (n == 0)
        throw Error(Errc::InvalidArgument, "a poset needs at least one element");

    for (Vertex a = 0; a < n; ++a)
        if (! leq.test(a, a))
            throw Error(Errc::NotReflexive, "element " + std::to_string(a) + " is not related to itself");

    for (Vertex a = 0; a < n; ++a)
        for (auto b = leq.row(a).next_from(a + 1); b != bits::npos; b = leq.row(a).next_from(b + 1))
            if (leq.test(b, a))
                throw Error(Errc::NotAntisymmetric, pair_str(a, b));

    for (Vertex a = 0; a < n; ++a) {
        auto up_a = leq.row(a);
        for (auto b = up_a.first(); b != bits::npos; b = up_a.next_from(b + 1)) {
            if (leq.row(b).is_subset_of(up_a))
                continue;
            Bitset missing(leq.row(b));
            missing -= up_a;
            auto c = missing.first();
            throw Error(Errc::NotTransitive,
                "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
        }
    }
    return Poset::from_trusted(std::move(leq));
}

Poset validate_poset(const std::vector<std::vector<bool>> & raw)
{
    BitMatrix leq(raw.size());
    for (Vertex a = 0; a < raw.size(); ++a) {
        if (raw[a].size() != raw.size())
            throw Error(Errc::InvalidArgument, "relation matrix is not square at row " + std::to_string(a));
        for (Vertex b = 0; b < raw.size(); ++b)
            if (raw[a][b])
                leq.set(a, b);
    }
    return validate_poset(std::move(leq));
}

Poset poset_from_relation(std::size_t size, const std::function<bool(Vertex, Vertex)> & less_or_equal)
{
    BitMatrix leq(size);
    for (Vertex a = 0; a < size; ++a)
        for (Vertex b = 0; b < size; ++b)
            if (a == b || less_or_equal(a, b))
                leq.set(a, b);
    return validate_poset(std::move(leq));
}

Poset chain_poset(std::size_t size)
{
    return poset_from_relation(size, [](Vertex a, Vertex b) { return a <= b; });
}

Poset antichain_poset(std::size_t size)
{
    return poset_from_relation(size, [](Vertex a, Vertex b) { return a == b; });
}

Graph comparability_graph(const Poset & p)
{
    Graph g(p.size());
    for (Vertex a = 0; a < p.size(); ++a)
        for (auto b = p.up(a).first(); b != bits::npos; b = p.up(a).next_from(b + 1))
            if (a != b)
                g.add_edge(a, b);
    return g;
}

Graph comparability_graph(const Poset & p, std::vector<std::string> labels)
{
    Graph g = comparability_graph(p);
    if (labels.size() != p.size())
        throw Error(Errc::InvalidArgument, "label count does not match poset size");
    for (Vertex v = 0; v < p.size(); ++v)
        g.set_label(v, std::move(labels[v]));
    return g;
}

std::vector<Edge> OrientedGraph::arcs() const
{
    std::vector<Edge> out;
    for (Vertex a = 0; a < size(); ++a)
        out_.row(a).for_each([&](Vertex b) { out.emplace_back(a, b); });
    return out;
}

void OrientedGraph::add_arc(Vertex a, Vertex b)
{
    if (a >= size() || b >= size())
        throw Error(Errc::VertexOutOfRange, "arc " + pair_str(a, b));
    if (a == b)
        throw Error(Errc::InvalidArgument, "loop at " + std::to_string(a));
    out_.set(a, b);
}

OrientedGraph orient(const Poset & p)
{
    OrientedGraph g(p.size());
    for (Vertex a = 0; a < p.size(); ++a)
        p.up(a).for_each([&](Vertex b) {
            if (a != b)
                g.add_arc(a, b);
        });
    return g;
}

bool is_acyclic(const OrientedGraph & g)
{
    std::vector<std::size_t> indegree(g.size(), 0);
    for (Vertex a = 0; a < g.size(); ++a)
        g.successors(a).for_each([&](Vertex b) { ++indegree[b]; });
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < g.size(); ++v)
        if (indegree[v] == 0)
            ready.push_back(v);
    std::size_t processed = 0;
    while (! ready.empty()) {
        auto u = ready.back();
        ready.pop_back();
        ++processed;
        g.successors(u).for_each([&](Vertex w) {
            if (--indegree[w] == 0)
                ready.push_back(w);
        });
    }
    return processed == g.size();
}

Bitset vertex_mask(std::size_t size, std::span<const Vertex> subset)
{
    Bitset mask(size);
    for (auto v : subset) {
        if (v >= size)
            throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " out of " + std::to_string(size));
        if (mask.test(v))
            throw Error(Errc::DuplicateVertex, "vertex " + std::to_string(v) + " listed twice");
        mask.set(v);
    }
    return mask;
}

std::vector<Vertex> all_vertices(std::size_t size)
{
    std::vector<Vertex> out(size);
    std::iota(out.begin(), out.end(), Vertex{0});
    return out;
}

MirskyLevels mirsky_levels(const OrientedGraph & g, std::span<const Vertex> subset)
{
    if (subset.empty())
        throw Error(Errc::EmptySubset, "levels of an empty vertex set");
    auto mask = vertex_mask(g.size(), subset);

    MirskyLevels out;
    out.level.assign(g.size(), MirskyLevels::not_member);
    out.predecessor.assign(g.size(), MirskyLevels::not_member);
    out.members = mask.to_vector();

    std::vector<std::size_t> indegree(g.size(), 0);
    for (auto u : out.members) {
        out.level[u] = 0;
        g.successors(u).for_each([&](Vertex w) {
            if (mask.test(w))
                ++indegree[w];
        });
    }

    std::vector<Vertex> ready;
    for (auto it = out.members.rbegin(); it != out.members.rend(); ++it)
        if (indegree[*it] == 0)
            ready.push_back(*it);

    std::size_t processed = 0;
    while (! ready.empty()) {
        auto u = ready.back();
        ready.pop_back();
        ++processed;
        g.successors(u).for_each([&](Vertex w) {
            if (! mask.test(w))
                return;
            auto candidate = out.level[u] + 1;
            if (candidate > out.level[w] || (candidate == out.level[w] && u < out.predecessor[w])) {
                out.level[w] = candidate;
                out.predecessor[w] = u;
            }
            if (--indegree[w] == 0)
                ready.push_back(w);
        });
        out.max_level = std::max(out.max_level, out.level[u]);
    }

    if (processed != out.members.size())
        throw Error(Errc::CyclicInput, "the induced digraph has a directed cycle");
    return out;
}

MirskyLevels mirsky_levels(const OrientedGraph & g)
{
    auto all = all_vertices(g.size());
    return mirsky_levels(g, all);
}

std::vector<Vertex> longest_chain(const MirskyLevels & levels)
{
    if (levels.members.empty())
        throw Error(Errc::EmptySubset, "chain in an empty vertex set");
    Vertex top = MirskyLevels::not_member;
    for (auto v : levels.members)
        if (levels.level[v] == levels.max_level) {
            top = v;
            break;
        }
    std::vector<Vertex> chain;
    for (auto v = top; v != MirskyLevels::not_member; v = levels.predecessor[v])
        chain.push_back(v);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::vector<Vertex> longest_chain(const Poset & p, std::span<const Vertex> subset)
{
    if (subset.empty())
        throw Error(Errc::EmptySubset, "chain in an empty vertex set");
    return longest_chain(mirsky_levels(orient(p), subset));
}

std::vector<Vertex> level_antichain(const MirskyLevels & levels, std::size_t target_level)
{
    if (levels.members.empty() || target_level > levels.max_level)
        throw Error(Errc::LevelOutOfRange,
            "level " + std::to_string(target_level) + " above maximum " + std::to_string(levels.max_level));
    std::vector<Vertex> out;
    for (auto v : levels.members)
        if (levels.level[v] == target_level)
            out.push_back(v);
    return out;
}

} // namespace poramsey
