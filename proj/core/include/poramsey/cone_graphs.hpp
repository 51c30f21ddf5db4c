#pragma once

#include "poramsey/graph.hpp"
#include "poramsey/poset.hpp"
#include "poramsey/ramsey.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace poramsey {

/// The semi-cone P_k = {0, k, 2k, ...} of Z.
class ConeSpec {
public:
    /// Throws InvalidArgument for k < 2.
    explicit ConeSpec(std::int64_t k);

    [[nodiscard]] std::int64_t k() const noexcept { return k_; }
    [[nodiscard]] bool contains(std::int64_t x) const noexcept { return x >= 0 && x % k_ == 0; }

    friend bool operator==(const ConeSpec &, const ConeSpec &) = default;

private:
    std::int64_t k_;
};

/// Integers lo..hi inclusive.
class Window {
public:
    inline static constexpr std::size_t max_width = 1U << 14;

    /// Throws InvalidArgument when lo > hi, SizeLimitExceeded past max_width.
    Window(std::int64_t lo, std::int64_t hi);

    [[nodiscard]] std::int64_t lo() const noexcept { return lo_; }
    [[nodiscard]] std::int64_t hi() const noexcept { return hi_; }
    [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(hi_ - lo_) + 1; }
    [[nodiscard]] std::int64_t value(Vertex v) const noexcept { return lo_ + static_cast<std::int64_t>(v); }

private:
    std::int64_t lo_;
    std::int64_t hi_;
};

using MembershipTest = std::function<bool(std::int64_t)>;

MembershipTest positive_multiples(std::int64_t k);

struct AxiomReport {
    bool intersect_ok = false;
    bool add_closed = false;
    bool mul_closed = false;
    /// Some x with neither x nor -x in the candidate, when one is found.
    std::optional<std::int64_t> cone_witness;
    /// First sample element s != 0 with s and -s both in the candidate (0
    /// itself when 0 is missing).
    std::optional<std::int64_t> intersect_violation;
};

/// Checks the three semi-cone axioms on the sample and its pairwise sums and
/// products, then looks for x in [0, |sample| bound + witness_search] outside
/// S and -S.
AxiomReport semicone_axioms(std::span<const std::int64_t> sample, const MembershipTest & candidate,
    std::int64_t witness_search = 64);

/// Vertex v is the integer lo + v; a <= b iff b - a is in P_k.
OrderedGraph cone_family(const ConeSpec & spec, const Window & window);
Graph cone_graph(const ConeSpec & spec, const Window & window);

/// (n-1)(m-1)+1 when m <= k+1, otherwise (n-1)k+1.
std::uint64_t cone_ramsey(const ConeSpec & spec, const RamseyQuery & q);

/// The disjoint cliques A_i = {k+i, 2k+i, ..., (n-1)k+i} on cone_ramsey - 1
/// integers, one per residue up to min(m-1, k). Empty when n or m is 1.
std::vector<std::vector<std::int64_t>> cone_extremal(const ConeSpec & spec, const RamseyQuery & q);

struct ConeVerificationOptions {
    std::size_t max_order = 30;
    /// Raw subset enumeration on the window runs only up to this many subsets.
    std::uint64_t max_raw_subsets = 20000;
};

struct ConeVerificationReport {
    ConeSpec spec{2};
    RamseyQuery query{1, 1};
    std::uint64_t formula = 0;
    /// Least r found by scanning residue count vectors; compared to formula.
    std::uint64_t exhaustive = 0;
    std::uint64_t count_vectors = 0;
    std::uint64_t raw_subsets = 0;
    bool vectors_pass = false;
    bool subgraphs_pass = false;
    bool extremal_avoids_both = false;
    bool all_pass = false;
    std::optional<std::vector<std::int64_t>> counterexample;
    double elapsed_ms = 0.0;
};

/// Throws CapExceeded when cone_ramsey exceeds options.max_order.
ConeVerificationReport verify_cone(const ConeSpec & spec, const RamseyQuery & q, const ConeVerificationOptions & options = {});

nlohmann::json to_json(const AxiomReport & r);
nlohmann::json to_json(const ConeVerificationReport & r);

} // namespace poramsey
