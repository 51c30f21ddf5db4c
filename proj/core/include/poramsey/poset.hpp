#pragma once

#include "poramsey/bits.hpp"
#include "poramsey/graph.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace poramsey {

/// Finite partial order on 0..size-1, stored as the full (reflexive)
/// relation matrix: leq(a, b) iff a <= b.
class Poset {
public:
    Poset() = default;

    [[nodiscard]] std::size_t size() const noexcept { return leq_.size(); }
    [[nodiscard]] bool leq(Vertex a, Vertex b) const noexcept { return leq_.test(a, b); }
    [[nodiscard]] bool comparable(Vertex a, Vertex b) const noexcept { return leq(a, b) || leq(b, a); }
    /// Everything above a, including a.
    [[nodiscard]] BitRow up(Vertex a) const noexcept { return leq_.row(a); }
    [[nodiscard]] const BitMatrix & relation() const noexcept { return leq_; }

    /// Skips the axiom checks; for generators that build valid orders by
    /// construction (the enumerator, fixed families).
    static Poset from_trusted(BitMatrix leq);

    friend bool operator==(const Poset &, const Poset &) = default;

private:
    explicit Poset(BitMatrix leq) : leq_(std::move(leq)) {}

    BitMatrix leq_;
};

/// Throws NotReflexive / NotAntisymmetric / NotTransitive naming the first
/// violating element, pair or triple; InvalidArgument for a non-square or
/// empty matrix.
Poset validate_poset(const std::vector<std::vector<bool>> & raw);
Poset validate_poset(BitMatrix leq);

/// Validated poset from a relation predicate; the diagonal is forced true.
Poset poset_from_relation(std::size_t size, const std::function<bool(Vertex, Vertex)> & less_or_equal);

Poset chain_poset(std::size_t size);
Poset antichain_poset(std::size_t size);

/// A generated graph paired with the order whose comparability graph it is
/// meant to be. Generators build the two independently.
struct OrderedGraph {
    Poset poset;
    Graph graph;
};

Graph comparability_graph(const Poset & p);
Graph comparability_graph(const Poset & p, std::vector<std::string> labels);

/// Directed graph whose arcs (a, b) mean a < b.
class OrientedGraph {
public:
    OrientedGraph() = default;
    explicit OrientedGraph(std::size_t size) : out_(size) {}

    [[nodiscard]] std::size_t size() const noexcept { return out_.size(); }
    [[nodiscard]] bool has_arc(Vertex a, Vertex b) const noexcept { return out_.test(a, b); }
    [[nodiscard]] BitRow successors(Vertex a) const noexcept { return out_.row(a); }
    [[nodiscard]] std::vector<Edge> arcs() const;

    void add_arc(Vertex a, Vertex b);

private:
    BitMatrix out_;
};

OrientedGraph orient(const Poset & p);

/// Kahn's algorithm; false when a directed cycle exists.
bool is_acyclic(const OrientedGraph & g);

struct MirskyLevels {
    static constexpr std::size_t not_member = bits::npos;

    /// level[a] = length of the longest directed path inside the subset that
    /// ends at a; not_member outside the subset.
    std::vector<std::size_t> level;
    /// Predecessor on one such longest path (smallest index among ties), or
    /// not_member for level-0 vertices and non-members.
    std::vector<Vertex> predecessor;
    std::vector<Vertex> members;
    std::size_t max_level = 0;

    [[nodiscard]] bool contains(Vertex v) const noexcept { return v < level.size() && level[v] != not_member; }
};

/// Throws EmptySubset, VertexOutOfRange, DuplicateVertex, or CyclicInput.
MirskyLevels mirsky_levels(const OrientedGraph & g, std::span<const Vertex> subset);
MirskyLevels mirsky_levels(const OrientedGraph & g);

/// Vertices of a maximum chain in the subset, bottom first.
std::vector<Vertex> longest_chain(const Poset & p, std::span<const Vertex> subset);
std::vector<Vertex> longest_chain(const MirskyLevels & levels);

/// All subset vertices on the given level, ascending. Throws LevelOutOfRange.
std::vector<Vertex> level_antichain(const MirskyLevels & levels, std::size_t target_level);

/// The vertex set as a mask; throws VertexOutOfRange / DuplicateVertex.
Bitset vertex_mask(std::size_t size, std::span<const Vertex> subset);

std::vector<Vertex> all_vertices(std::size_t size);

} // namespace poramsey
