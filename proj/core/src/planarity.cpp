#include "poramsey/planarity.hpp"

#include "poramsey/error.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <string>

namespace poramsey {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
    boost::property<boost::vertex_index_t, int>, boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

Edge normalised(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

BoostGraph to_boost(std::size_t size, std::span<const Edge> edges)
{
    BoostGraph bg(size);
    for (auto [a, b] : edges)
        boost::add_edge(a, b, bg);
    auto edge_index = boost::get(boost::edge_index, bg);
    int next_index = 0;
    for (auto [it, end] = boost::edges(bg); it != end; ++it)
        boost::put(edge_index, *it, next_index++);
    return bg;
}

bool boost_planar(std::size_t size, std::span<const Edge> edges)
{
    auto bg = to_boost(size, edges);
    return boost::boyer_myrvold_planarity_test(bg);
}

/// Boost's Kuratowski edges can carry extra edges; drop every edge whose removal
/// keeps the set non-planar. An edge-minimal non-planar graph is a subdivision
/// of K5 or K3,3 plus isolated vertices.
std::vector<Edge> minimise_nonplanar(std::size_t size, std::vector<Edge> edges)
{
    for (std::size_t i = 0; i < edges.size();) {
        auto without = edges;
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
        if (! boost_planar(size, without))
            edges = std::move(without);
        else
            ++i;
    }
    return edges;
}

} // namespace

PlanarityResult is_planar(const Graph & g)
{
    const auto all_edges = g.edges();
    auto bg = to_boost(g.size(), all_edges);

    std::vector<std::vector<BoostEdge>> embedding(boost::num_vertices(bg));
    std::vector<BoostEdge> kuratowski;
    bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding.data(),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

    PlanarityResult result;
    result.planar = planar;
    if (planar) {
        result.embedding.resize(g.size());
        for (Vertex v = 0; v < g.size(); ++v)
            for (const auto & e : embedding[v]) {
                auto s = boost::source(e, bg);
                auto t = boost::target(e, bg);
                result.embedding[v].push_back(s == v ? t : s);
            }
        if (! validate_embedding(g, result.embedding))
            throw Error(Errc::InvalidArgument, "planarity search produced an invalid embedding");
    }
    else {
        std::vector<Edge> edges;
        for (const auto & e : kuratowski)
            edges.push_back(normalised(boost::source(e, bg), boost::target(e, bg)));
        auto certificate = classify_kuratowski_subgraph(g, minimise_nonplanar(g.size(), std::move(edges)));
        if (! certificate)
            throw Error(Errc::InvalidArgument, "planarity search produced an invalid Kuratowski subgraph");
        result.certificate = std::move(certificate);
    }
    return result;
}

bool validate_embedding(const Graph & g, const RotationSystem & rotation)
{
    if (rotation.size() != g.size())
        return false;

    // position[v][u] = index of u in the rotation at v
    std::vector<std::map<Vertex, std::size_t>> position(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        if (rotation[v].size() != degree(g, v))
            return false;
        for (std::size_t i = 0; i < rotation[v].size(); ++i) {
            auto u = rotation[v][i];
            if (u >= g.size() || ! g.adjacent(v, u) || ! position[v].emplace(u, i).second)
                return false;
        }
    }

    // Each dart (u, v) is followed by (v, w) where w comes after u around v.
    std::set<Edge> seen;
    std::size_t faces = 0;
    for (Vertex u = 0; u < g.size(); ++u)
        for (auto v : rotation[u]) {
            if (seen.contains({u, v}))
                continue;
            ++faces;
            Vertex a = u, b = v;
            while (seen.insert({a, b}).second) {
                const auto & around = rotation[b];
                auto w = around[(position[b].at(a) + 1) % around.size()];
                a = b;
                b = w;
            }
        }

    auto components = connected_components(g);
    std::size_t isolated = 0;
    for (const auto & c : components)
        if (c.size() == 1)
            ++isolated;
    auto lhs = static_cast<long long>(g.size()) - static_cast<long long>(g.edge_count())
        + static_cast<long long>(faces) + static_cast<long long>(isolated);
    return lhs == 2 * static_cast<long long>(components.size());
}

std::optional<KuratowskiCertificate> classify_kuratowski_subgraph(const Graph & g, std::span<const Edge> edges)
{
    std::map<Vertex, std::vector<Vertex>> adjacency;
    std::set<Edge> unique;
    for (auto [a, b] : edges) {
        if (a >= g.size() || b >= g.size() || a == b || ! g.adjacent(a, b))
            return std::nullopt;
        if (! unique.insert(normalised(a, b)).second)
            return std::nullopt;
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }

    std::vector<Vertex> branch;
    std::size_t internal = 0;
    std::size_t branch_degree = 0;
    for (const auto & [v, nbrs] : adjacency) {
        if (nbrs.size() == 2)
            ++internal;
        else if (nbrs.size() < 2)
            return std::nullopt;
        else {
            if (branch_degree != 0 && nbrs.size() != branch_degree)
                return std::nullopt;
            branch_degree = nbrs.size();
            branch.push_back(v);
        }
    }

    KuratowskiKind kind;
    if (branch.size() == 5 && branch_degree == 4)
        kind = KuratowskiKind::K5;
    else if (branch.size() == 6 && branch_degree == 3)
        kind = KuratowskiKind::K33;
    else
        return std::nullopt;

    // Contract the degree-two paths between branch vertices.
    std::set<Vertex> branch_set(branch.begin(), branch.end());
    std::set<Vertex> internal_seen;
    std::set<Edge> contracted;
    for (auto start : branch)
        for (auto first : adjacency[start]) {
            Vertex prev = start, cur = first;
            while (! branch_set.contains(cur)) {
                internal_seen.insert(cur);
                const auto & nb = adjacency[cur];
                Vertex next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            if (cur == start)
                return std::nullopt;
            contracted.insert(normalised(start, cur));
        }
    if (internal_seen.size() != internal)
        return std::nullopt;

    KuratowskiCertificate cert;
    cert.kind = kind;
    cert.edges.assign(unique.begin(), unique.end());

    if (kind == KuratowskiKind::K5) {
        if (contracted.size() != 10)
            return std::nullopt;
        cert.branch_vertices = branch;
        return cert;
    }

    if (contracted.size() != 9)
        return std::nullopt;
    // Two-colour the contracted graph; it must be K3,3.
    std::map<Vertex, int> side{{branch[0], 0}};
    std::vector<Vertex> stack{branch[0]};
    while (! stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto [a, b] : contracted) {
            if (a != v && b != v)
                continue;
            auto u = a == v ? b : a;
            auto [it, fresh] = side.emplace(u, 1 - side[v]);
            if (fresh)
                stack.push_back(u);
            else if (it->second == side[v])
                return std::nullopt;
        }
    }
    std::vector<Vertex> left, right;
    for (auto v : branch)
        (side.at(v) == 0 ? left : right).push_back(v);
    if (left.size() != 3 || right.size() != 3)
        return std::nullopt;
    cert.branch_vertices = left;
    cert.branch_vertices.insert(cert.branch_vertices.end(), right.begin(), right.end());
    return cert;
}

bool validate_certificate(const Graph & g, const KuratowskiCertificate & certificate)
{
    auto classified = classify_kuratowski_subgraph(g, certificate.edges);
    if (! classified || classified->kind != certificate.kind)
        return false;
    auto expected = certificate.branch_vertices;
    auto actual = classified->branch_vertices;
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    return expected == actual;
}

KuratowskiCertificate k33_certificate(const Graph & g, const std::array<Vertex, 3> & left,
    const std::array<Vertex, 3> & right)
{
    KuratowskiCertificate cert;
    cert.kind = KuratowskiKind::K33;
    for (auto a : left)
        for (auto b : right) {
            if (a >= g.size() || b >= g.size() || ! g.adjacent(a, b))
                throw Error(Errc::InvalidArgument,
                    "pair (" + std::to_string(a) + ", " + std::to_string(b) + ") is not an edge");
            cert.edges.push_back(normalised(a, b));
        }
    std::sort(cert.edges.begin(), cert.edges.end());
    cert.branch_vertices.assign(left.begin(), left.end());
    cert.branch_vertices.insert(cert.branch_vertices.end(), right.begin(), right.end());
    return cert;
}

} // namespace poramsey
