#pragma once

#include "poramsey/graph.hpp"
#include "poramsey/poset.hpp"
#include "poramsey/ramsey.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace poramsey {

/// Bit i set <=> modulus i+1 (or coordinate i+1) is selected.
using SubsetMask = std::uint64_t;

std::int64_t gcd_abs(std::int64_t a, std::int64_t b);
/// The first `count` primes, ascending.
std::vector<std::int64_t> first_primes(std::size_t count);

// ---- perfect divisor graphs ------------------------------------------------

/// Largest modulus count accepted by the pdg generator (2^n - 2 vertices,
/// dense adjacency).
inline constexpr std::size_t max_pdg_moduli = 14;

/// n >= 2 pairwise coprime integers, none of them 0 or +-1.
class PdgSpec {
public:
    /// Throws TooSmall, ImproperModulus(i) or NotCoprime(i, j); indices in
    /// messages are 1-based.
    explicit PdgSpec(std::vector<std::int64_t> moduli);

    [[nodiscard]] std::size_t size() const noexcept { return moduli_.size(); }
    [[nodiscard]] const std::vector<std::int64_t> & moduli() const noexcept { return moduli_; }

private:
    std::vector<std::int64_t> moduli_;
};

/// Vertex v of a pdg graph is the index set with mask v + 1.
constexpr Vertex pdg_vertex(SubsetMask mask) noexcept { return static_cast<Vertex>(mask - 1); }
constexpr SubsetMask pdg_mask(Vertex v) noexcept { return static_cast<SubsetMask>(v) + 1; }

/// "m1*m3" style label of an index set.
std::string pdg_label(SubsetMask mask);

/// Product of the selected moduli, or nullopt on int64 overflow.
std::optional<std::int64_t> pdg_value(const PdgSpec & spec, SubsetMask mask);

/// Vertices are the nonempty proper index sets; edges and order come from
/// strict index-set containment.
OrderedGraph pdg_family(const PdgSpec & spec);
Graph pdg_graph(const PdgSpec & spec);

struct PdgProperties {
    std::uint64_t vertex_count = 0;
    bool connected = false;
    Distance diameter;
    std::size_t domination = 0;
    /// Number of classes P_k (index sets of size k), 1 <= k <= n-1.
    std::size_t parts = 0;
    /// degree_by_size[k-1] is the degree of every vertex with |J| = k.
    std::vector<std::uint64_t> degree_by_size;
    Distance girth;
    bool planar = false;
};

/// Closed-form invariants of pdg(S) for |S| = n >= 2.
PdgProperties pdg_expected_properties(std::size_t n);

struct PdgK33 {
    std::array<SubsetMask, 3> left;  // m1m2m3, m1m2m4, m1m2m5
    std::array<SubsetMask, 3> right; // m1, m2, m1m2
};

/// Throws TooSmall for n < 5.
PdgK33 pdg_k33_certificate(std::size_t n);

struct PdgExtremal {
    PdgSpec spec;
    /// blocks[i] = A_{i+1} as index-set masks.
    std::vector<std::vector<SubsetMask>> blocks;

    /// All block members as pdg vertex indices, block by block.
    [[nodiscard]] std::vector<Vertex> vertices() const;
};

/// Over the first w = (n-1)(m-1) primes, or w+1 when m = 2 so that the top
/// block stays a proper index set; A_i = {a_i p_{k_i+1}, ..., a_i p_{k_i+m-1}} with a_i = p_1...p_{k_i} and
/// k_i = (i-1)(m-1). Throws DegenerateQuery when n < 2 or m < 2.
PdgExtremal pdg_extremal(const RamseyQuery & q);

// ---- Z_n ------------------------------------------------------------------

inline constexpr std::uint64_t max_zn_modulus = 1U << 16;

class ZnElement {
public:
    /// Throws InvalidArgument unless modulus >= 2 and value < modulus.
    ZnElement(std::uint64_t modulus, std::uint64_t value);

    [[nodiscard]] std::uint64_t modulus() const noexcept { return modulus_; }
    [[nodiscard]] std::uint64_t value() const noexcept { return value_; }
    /// Nonzero non-unit.
    [[nodiscard]] bool is_proper() const noexcept;

private:
    std::uint64_t modulus_;
    std::uint64_t value_;
};

/// a | b in Z_n, via gcd(a, n) | b. Throws ModulusMismatch.
bool divides_zn(const ZnElement & a, const ZnElement & b);
/// a | b and b does not divide a.
bool strictly_divides_zn(const ZnElement & a, const ZnElement & b);

/// Proper elements of Z_n, edges between strictly one-way divisible pairs.
/// Throws NoProperElements (prime n) or InvalidArgument.
OrderedGraph divisibility_graph_zn(std::uint64_t n);

/// Nontrivial ideals dZ_n (1 < d < n, d | n), ordered by inclusion.
/// Throws NoNontrivialIdeals.
OrderedGraph inclusion_ideal_graph_zn(std::uint64_t n);

// ---- integer matrices -----------------------------------------------------

class IntMatrix {
public:
    /// Row-major entries; throws DimensionMismatch unless entries.size() ==
    /// dim * dim, InvalidArgument for dim < 1, Overflow if the determinant
    /// leaves int64.
    IntMatrix(std::size_t dim, std::vector<std::int64_t> entries);

    static IntMatrix identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::int64_t at(std::size_t row, std::size_t col) const { return entries_.at(row * dim_ + col); }
    [[nodiscard]] std::int64_t det() const noexcept { return det_; }
    [[nodiscard]] const std::vector<std::int64_t> & entries() const noexcept { return entries_; }

    /// Throws DimensionMismatch or Overflow.
    friend IntMatrix operator*(const IntMatrix & a, const IntMatrix & b);
    friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
    std::size_t dim_;
    std::vector<std::int64_t> entries_;
    std::int64_t det_;
};

/// Exact integer determinant (fraction-free elimination).
std::int64_t determinant(std::size_t dim, std::span<const std::int64_t> entries);

/// diag(d, 1, ..., 1). Throws InvalidArgument for dim < 2.
IntMatrix matrix_with_det(std::size_t dim, std::int64_t d);

/// Edges between matrices whose determinants strictly one-way divide in Z.
/// Throws ImproperDeterminant(index) or DimensionMismatch.
OrderedGraph matrix_graph(std::span<const IntMatrix> matrices);

struct MatrixExtremal {
    std::vector<IntMatrix> matrices;
    /// Indices into `matrices`, one block per A_i.
    std::vector<std::vector<Vertex>> blocks;
};

/// X_i = diag(p_i, 1, ...), q_i = X_1 ... X_{k_i}, A_i = {q_i X_{k_i+j}}.
MatrixExtremal matrix_extremal(const RamseyQuery & q, std::size_t dim);

// ---- idempotents of a product of copies of Z_2 ------------------------------

inline constexpr std::size_t max_idempotent_width = 14;

/// Coordinate 1 first.
std::string idempotent_label(SubsetMask mask, std::size_t width);

/// a | b  <=>  support(b) is inside support(a).
bool idempotent_divides(SubsetMask a, SubsetMask b) noexcept;

/// All 2^width idempotents; vertex index = mask. Throws WidthLimitExceeded.
OrderedGraph idempotent_graph(std::size_t width);

struct IdempotentExtremal {
    std::size_t width = 0;
    std::vector<std::vector<SubsetMask>> blocks;

    [[nodiscard]] std::vector<Vertex> vertices() const;
};

/// p_i = all ones with coordinate i cleared; a_i = p_1 ... p_{k_i};
/// A_i = {a_i p_{k_i+j} : 1 <= j <= m-1}. Throws DegenerateQuery.
IdempotentExtremal idempotent_extremal(const RamseyQuery & q);

/// Product in the Boolean ring is coordinatewise AND.
SubsetMask idempotent_product(std::span<const SubsetMask> factors, std::size_t width);

/// p_i for 1-based i.
SubsetMask maximal_idempotent(std::size_t i, std::size_t width);

} // namespace poramsey
