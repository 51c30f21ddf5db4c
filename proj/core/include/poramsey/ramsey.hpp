#pragma once

#include "poramsey/graph.hpp"
#include "poramsey/parallel.hpp"
#include "poramsey/poset.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace poramsey {

/// Targets for a Ramsey question: a clique of n vertices or an independent
/// set of m vertices.
class RamseyQuery {
public:
    /// Throws InvalidArgument unless n, m >= 1.
    RamseyQuery(std::size_t n, std::size_t m);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t m() const noexcept { return m_; }
    [[nodiscard]] RamseyQuery swapped() const { return {m_, n_}; }

    friend bool operator==(const RamseyQuery &, const RamseyQuery &) = default;

private:
    std::size_t n_;
    std::size_t m_;
};

/// Ramsey number of the class of comparability graphs: (n-1)(m-1)+1.
std::uint64_t ramsey_po(const RamseyQuery & q);

struct RamseyWitness {
    enum class Kind { Clique, Independent };

    Kind kind = Kind::Clique;
    std::vector<Vertex> vertices;

    friend bool operator==(const RamseyWitness &, const RamseyWitness &) = default;
};

/// Pigeonhole extraction over Mirsky levels of the induced suborder: a chain
/// of n when some level reaches n-1 (checked first), otherwise the first
/// level holding m vertices, truncated to its m smallest indices.
/// Throws SubsetTooSmall when |subset| < ramsey_po(q).
RamseyWitness extract_witness(const Poset & p, std::span<const Vertex> subset, const RamseyQuery & q);
/// Same, reusing an orientation computed once for a large ambient order.
RamseyWitness extract_witness(const OrientedGraph & order, std::span<const Vertex> subset, const RamseyQuery & q);

/// Checks size, distinctness and pairwise (in)comparability.
bool witness_is_valid(const Poset & p, const RamseyWitness & w, const RamseyQuery & q);
bool witness_is_valid(const Graph & g, const RamseyWitness & w, const RamseyQuery & q);

struct ExtremalPartition {
    std::size_t n = 0;
    std::size_t m = 0;
    /// n-1 blocks of m-1 vertex indices each.
    std::vector<std::vector<Vertex>> blocks;
};

struct ExtremalPo {
    Poset poset;
    Graph graph;
    ExtremalPartition partition;
};

/// Blocks of m-1 antichains stacked n-1 high: a below b iff block(a) <
/// block(b). Throws DegenerateQuery when n < 2 or m < 2.
ExtremalPo extremal_po_graph(const RamseyQuery & q);

struct EnumerationOptions {
    std::size_t max_poset_order = 7;
    std::size_t max_graph_order = 6;
    unsigned workers = default_workers();
};

struct VerificationReport {
    RamseyQuery query{1, 1};
    std::size_t order = 0;
    std::uint64_t enumerated = 0;
    bool witnesses_valid = false;
    bool extremal_avoids_both = false;
    bool all_pass = false;
    std::optional<Graph> counterexample;
    double elapsed_ms = 0.0;
};

/// Every labeled poset at order r = ramsey_po(q) yields a valid witness and
/// the extremal order on r-1 elements has neither target. Throws CapExceeded
/// when r exceeds options.max_poset_order.
VerificationReport verify_po_class(const RamseyQuery & q, const EnumerationOptions & options = {});

struct SearchReport {
    RamseyQuery query{1, 1};
    std::size_t order = 0;
    std::uint64_t enumerated = 0;
    bool all_pass = false;
    std::optional<Graph> counterexample;
    double elapsed_ms = 0.0;
};

/// Exhaustive search over all labeled graphs on `order` vertices. Shards fix
/// the edges at vertex 0; the reported counterexample is the first one in
/// the smallest failing shard. Throws CapExceeded past max_graph_order.
SearchReport general_ramsey_search(const RamseyQuery & q, std::size_t order, const EnumerationOptions & options = {});

/// Classical Ramsey number R(n, m) when it is known exactly: n or m at most
/// 2, or one of the small settled pairs. nullopt otherwise.
std::optional<std::uint64_t> classical_ramsey(const RamseyQuery & q);

/// True when g has K_n or an independent m-set.
bool has_clique_or_independent(const Graph & g, const RamseyQuery & q);

nlohmann::json to_json(const RamseyQuery & q);
nlohmann::json to_json(const RamseyWitness & w);
nlohmann::json to_json(const VerificationReport & r);
nlohmann::json to_json(const SearchReport & r);

} // namespace poramsey
