#include "poramsey/graph.hpp"

#include "poramsey/error.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace poramsey {

Graph::Graph(std::size_t size) : adj_(size)
{
    labels_.reserve(size);
    for (std::size_t v = 0; v < size; ++v)
        labels_.push_back(std::to_string(v));
}

Graph::Graph(std::size_t size, std::vector<std::string> labels) : adj_(size), labels_(std::move(labels))
{
    if (labels_.size() != size)
        throw Error(Errc::InvalidArgument,
            "expected " + std::to_string(size) + " labels, got " + std::to_string(labels_.size()));
}

void Graph::check_vertex(Vertex v) const
{
    if (v >= size())
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " in graph of size " + std::to_string(size()));
}

void Graph::add_edge(Vertex a, Vertex b)
{
    check_vertex(a);
    check_vertex(b);
    if (a == b)
        throw Error(Errc::InvalidArgument, "loop at vertex " + std::to_string(a));
    adj_.set(a, b);
    adj_.set(b, a);
}

void Graph::remove_edge(Vertex a, Vertex b)
{
    check_vertex(a);
    check_vertex(b);
    adj_.reset(a, b);
    adj_.reset(b, a);
}

void Graph::set_label(Vertex v, std::string label)
{
    check_vertex(v);
    labels_[v] = std::move(label);
}

std::size_t Graph::edge_count() const noexcept
{
    std::size_t twice = 0;
    for (Vertex v = 0; v < size(); ++v)
        twice += adj_.row(v).count();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex a = 0; a < size(); ++a)
        for (auto b = adj_.row(a).next_from(a + 1); b != bits::npos; b = adj_.row(a).next_from(b + 1))
            out.emplace_back(a, b);
    return out;
}

Graph Graph::complement() const
{
    Graph c(size(), labels_);
    for (Vertex a = 0; a < size(); ++a)
        for (Vertex b = a + 1; b < size(); ++b)
            if (! adjacent(a, b))
                c.add_edge(a, b);
    return c;
}

Graph complete_graph(std::size_t n)
{
    Graph g(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            g.add_edge(a, b);
    return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_bipartite(std::size_t left, std::size_t right)
{
    Graph g(left + right);
    for (Vertex a = 0; a < left; ++a)
        for (Vertex b = left; b < left + right; ++b)
            g.add_edge(a, b);
    return g;
}

Graph path_graph(std::size_t n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw Error(Errc::InvalidArgument, "a cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

std::string Distance::to_string() const { return is_infinite() ? "inf" : std::to_string(*value_); }

Graph induced_subgraph(const Graph & g, std::span<const Vertex> subset)
{
    Bitset seen(g.size());
    std::vector<std::string> labels;
    labels.reserve(subset.size());
    for (auto v : subset) {
        if (v >= g.size())
            throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " in graph of size " + std::to_string(g.size()));
        if (seen.test(v))
            throw Error(Errc::DuplicateVertex, "vertex " + std::to_string(v) + " listed twice");
        seen.set(v);
        labels.push_back(g.label(v));
    }

    Graph h(subset.size(), std::move(labels));
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (g.adjacent(subset[i], subset[j]))
                h.add_edge(i, j);
    return h;
}

namespace {

void enforce_limit(const Graph & g, const SearchLimits & limits, const char * what)
{
    if (g.size() > limits.max_vertices)
        throw Error(Errc::SizeLimitExceeded, std::string(what) + " on " + std::to_string(g.size())
                + " vertices exceeds the cap of " + std::to_string(limits.max_vertices));
}

// Branch and bound with a greedy colouring bound, vertices taken in reverse
// colour order.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph & g) : g_(g) {}

    std::vector<Vertex> run()
    {
        if (g_.size() == 0)
            return {};
        expand(Bitset::full(g_.size()));
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void colour_order(const Bitset & p, std::vector<Vertex> & order, std::vector<std::size_t> & bounds) const
    {
        Bitset uncoloured = p;
        std::size_t colour = 0;
        while (uncoloured.any()) {
            ++colour;
            Bitset q = uncoloured;
            for (auto v = q.first(); v != bits::npos; v = q.first()) {
                uncoloured.reset(v);
                q.reset(v);
                q -= g_.neighbors(v);
                order.push_back(v);
                bounds.push_back(colour);
            }
        }
    }

    void expand(Bitset p)
    {
        std::vector<Vertex> order;
        std::vector<std::size_t> bounds;
        colour_order(p, order, bounds);

        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + bounds[i] <= best_.size())
                return;
            auto v = order[i];
            current_.push_back(v);
            Bitset next = p;
            next &= g_.neighbors(v);
            if (next.none()) {
                if (current_.size() > best_.size())
                    best_ = current_;
            }
            else
                expand(std::move(next));
            current_.pop_back();
            p.reset(v);
        }
    }

    const Graph & g_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
};

} // namespace

std::vector<Vertex> maximum_clique(const Graph & g, const SearchLimits & limits)
{
    enforce_limit(g, limits, "clique search");
    return CliqueSearch(g).run();
}

std::size_t clique_number(const Graph & g, const SearchLimits & limits) { return maximum_clique(g, limits).size(); }

std::vector<Vertex> maximum_independent_set(const Graph & g, const SearchLimits & limits)
{
    enforce_limit(g, limits, "independent set search");
    return CliqueSearch(g.complement()).run();
}

std::size_t independence_number(const Graph & g, const SearchLimits & limits)
{
    return maximum_independent_set(g, limits).size();
}

bool is_clique(const Graph & g, std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] >= g.size() || vertices[j] >= g.size() || ! g.adjacent(vertices[i], vertices[j]))
                return false;
    return std::all_of(vertices.begin(), vertices.end(), [&](Vertex v) { return v < g.size(); });
}

bool is_independent_set(const Graph & g, std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] >= g.size() || vertices[j] >= g.size() || vertices[i] == vertices[j]
                || g.adjacent(vertices[i], vertices[j]))
                return false;
    return std::all_of(vertices.begin(), vertices.end(), [&](Vertex v) { return v < g.size(); });
}

namespace {

void require_nonempty(const Graph & g, const char * what)
{
    if (g.size() == 0)
        throw Error(Errc::EmptyGraph, std::string(what) + " of a graph with no vertices");
}

} // namespace

std::vector<Distance> bfs_distances(const Graph & g, Vertex source)
{
    if (source >= g.size())
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(source));
    std::vector<Distance> dist(g.size(), Distance::infinite());
    std::deque<Vertex> queue{source};
    dist[source] = Distance(0);
    while (! queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        g.neighbors(u).for_each([&](Vertex w) {
            if (dist[w].is_infinite()) {
                dist[w] = Distance(dist[u].value() + 1);
                queue.push_back(w);
            }
        });
    }
    return dist;
}

bool is_connected(const Graph & g)
{
    require_nonempty(g, "connectivity");
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](const Distance & d) { return d.is_infinite(); });
}

std::vector<std::vector<Vertex>> connected_components(const Graph & g)
{
    std::vector<std::vector<Vertex>> out;
    Bitset unseen = Bitset::full(g.size());
    for (auto root = unseen.first(); root != bits::npos; root = unseen.first()) {
        std::vector<Vertex> component{root};
        unseen.reset(root);
        for (std::size_t i = 0; i < component.size(); ++i) {
            Bitset fresh(g.neighbors(component[i]));
            fresh &= unseen;
            fresh.for_each([&](Vertex w) {
                unseen.reset(w);
                component.push_back(w);
            });
        }
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
    }
    return out;
}

Distance diameter(const Graph & g)
{
    require_nonempty(g, "diameter");
    std::size_t best = 0;
    for (Vertex v = 0; v < g.size(); ++v)
        for (const auto & d : bfs_distances(g, v)) {
            if (d.is_infinite())
                return Distance::infinite();
            best = std::max(best, d.value());
        }
    return Distance(best);
}

Distance girth(const Graph & g)
{
    // A BFS from every root; the first non-tree edge met from root r closes a
    // walk through r, and the minimum over all roots is the girth.
    std::optional<std::size_t> best;
    std::vector<std::size_t> dist(g.size());
    std::vector<Vertex> parent(g.size());
    Bitset visited(g.size());
    for (Vertex root = 0; root < g.size(); ++root) {
        visited.clear();
        visited.set(root);
        dist[root] = 0;
        parent[root] = root;
        std::deque<Vertex> queue{root};
        while (! queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            if (best && 2 * dist[u] >= *best)
                break;
            g.neighbors(u).for_each([&](Vertex w) {
                if (! visited.test(w)) {
                    visited.set(w);
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
                else if (parent[u] != w) {
                    auto len = dist[u] + dist[w] + 1;
                    if (! best || len < *best)
                        best = len;
                }
            });
        }
        if (best && *best == 3)
            break;
    }
    return best ? Distance(*best) : Distance::infinite();
}

namespace {

class DominationSearch {
public:
    explicit DominationSearch(const Graph & g) : g_(g), closed_(g.size())
    {
        for (Vertex v = 0; v < g.size(); ++v) {
            Bitset c(g.neighbors(v));
            c.set(v);
            max_cover_ = std::max(max_cover_, c.count());
            closed_[v] = std::move(c);
        }
    }

    std::vector<Vertex> run()
    {
        for (std::size_t budget = 1; budget <= g_.size(); ++budget) {
            chosen_.clear();
            if (search(Bitset(g_.size()), budget))
                return chosen_;
        }
        return chosen_;
    }

private:
    bool search(const Bitset & covered, std::size_t budget)
    {
        auto uncovered = g_.size() - covered.count();
        if (uncovered == 0)
            return true;
        if (budget == 0 || uncovered > budget * max_cover_)
            return false;

        // Some member of the first uncovered vertex's closed neighbourhood
        // must be chosen.
        Bitset missing = Bitset::full(g_.size());
        missing -= covered;
        auto target = missing.first();
        bool found = false;
        closed_[target].for_each([&](Vertex v) {
            if (found)
                return;
            Bitset next = covered;
            next |= closed_[v];
            chosen_.push_back(v);
            if (search(next, budget - 1))
                found = true;
            else
                chosen_.pop_back();
        });
        return found;
    }

    const Graph & g_;
    std::vector<Bitset> closed_;
    std::size_t max_cover_ = 0;
    std::vector<Vertex> chosen_;
};

} // namespace

std::vector<Vertex> minimum_dominating_set(const Graph & g, const SearchLimits & limits)
{
    require_nonempty(g, "domination number");
    enforce_limit(g, limits, "domination search");
    auto set = DominationSearch(g).run();
    std::sort(set.begin(), set.end());
    return set;
}

std::size_t domination_number(const Graph & g, const SearchLimits & limits)
{
    return minimum_dominating_set(g, limits).size();
}

bool is_dominating_set(const Graph & g, std::span<const Vertex> vertices)
{
    Bitset covered(g.size());
    for (auto v : vertices) {
        if (v >= g.size())
            return false;
        covered.set(v);
        covered |= g.neighbors(v);
    }
    return covered.count() == g.size();
}

std::size_t degree(const Graph & g, Vertex v)
{
    if (v >= g.size())
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " in graph of size " + std::to_string(g.size()));
    return g.neighbors(v).count();
}

MultipartiteResult complete_multipartite_parts(const Graph & g)
{
    require_nonempty(g, "multipartite decomposition");
    auto parts = connected_components(g.complement());
    for (const auto & part : parts)
        if (! is_independent_set(g, part))
            return NotCompleteMultipartite{};
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (auto a : parts[i])
                for (auto b : parts[j])
                    if (! g.adjacent(a, b))
                        return NotCompleteMultipartite{};
    return parts;
}

} // namespace poramsey
