#pragma once

#include "poramsey/bits.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace poramsey {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..size-1 with per-vertex labels.
/// Adjacency is a dense bit matrix kept symmetric and irreflexive.
class Graph {
public:
    Graph() = default;

    /// Labels default to the decimal vertex index.
    explicit Graph(std::size_t size);
    Graph(std::size_t size, std::vector<std::string> labels);

    [[nodiscard]] std::size_t size() const noexcept { return adj_.size(); }
    [[nodiscard]] bool adjacent(Vertex a, Vertex b) const noexcept { return adj_.test(a, b); }
    [[nodiscard]] BitRow neighbors(Vertex v) const noexcept { return adj_.row(v); }
    [[nodiscard]] const std::vector<std::string> & labels() const noexcept { return labels_; }
    [[nodiscard]] const std::string & label(Vertex v) const { return labels_.at(v); }

    /// Throws VertexOutOfRange, or InvalidArgument for a loop.
    void add_edge(Vertex a, Vertex b);
    void remove_edge(Vertex a, Vertex b);
    void set_label(Vertex v, std::string label);

    [[nodiscard]] std::size_t edge_count() const noexcept;
    /// Edges as (i, j) with i < j in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    [[nodiscard]] Graph complement() const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    void check_vertex(Vertex v) const;

    BitMatrix adj_;
    std::vector<std::string> labels_;
};

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph complete_bipartite(std::size_t left, std::size_t right);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

/// Shortest-path length, with a distinct infinite value for unreachable pairs
/// and acyclic graphs.
class Distance {
public:
    constexpr Distance() = default;
    constexpr explicit Distance(std::size_t v) : value_(v) {}

    static constexpr Distance infinite() { return Distance{}; }

    [[nodiscard]] constexpr bool is_infinite() const noexcept { return ! value_.has_value(); }
    [[nodiscard]] constexpr bool is_finite() const noexcept { return value_.has_value(); }
    /// Precondition: finite.
    [[nodiscard]] constexpr std::size_t value() const { return *value_; }

    [[nodiscard]] std::string to_string() const;

    friend constexpr bool operator==(const Distance &, const Distance &) = default;

private:
    std::optional<std::size_t> value_;
};

/// Caps on the exact NP-hard searches.
struct SearchLimits {
    std::size_t max_vertices = 64;
};

Graph induced_subgraph(const Graph & g, std::span<const Vertex> subset);

std::vector<Vertex> maximum_clique(const Graph & g, const SearchLimits & limits = {});
std::size_t clique_number(const Graph & g, const SearchLimits & limits = {});
std::vector<Vertex> maximum_independent_set(const Graph & g, const SearchLimits & limits = {});
std::size_t independence_number(const Graph & g, const SearchLimits & limits = {});

bool is_clique(const Graph & g, std::span<const Vertex> vertices);
bool is_independent_set(const Graph & g, std::span<const Vertex> vertices);

bool is_connected(const Graph & g);
std::vector<std::vector<Vertex>> connected_components(const Graph & g);
std::vector<Distance> bfs_distances(const Graph & g, Vertex source);
Distance diameter(const Graph & g);
Distance girth(const Graph & g);

std::size_t domination_number(const Graph & g, const SearchLimits & limits = {});
std::vector<Vertex> minimum_dominating_set(const Graph & g, const SearchLimits & limits = {});
bool is_dominating_set(const Graph & g, std::span<const Vertex> vertices);

std::size_t degree(const Graph & g, Vertex v);

struct NotCompleteMultipartite {
    friend bool operator==(const NotCompleteMultipartite &, const NotCompleteMultipartite &) = default;
};

using MultipartiteResult = std::variant<std::vector<std::vector<Vertex>>, NotCompleteMultipartite>;

/// Parts are the connected components of the complement, each sorted, listed
/// by smallest member.
MultipartiteResult complete_multipartite_parts(const Graph & g);

} // namespace poramsey
