#include "poramsey/ring_graphs.hpp"

#include "poramsey/error.hpp"

#include <bit>
#include <cstdlib>
#include <numeric>

namespace poramsey {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error(Errc::Overflow, std::to_string(a) + " * " + std::to_string(b) + " leaves int64");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw Error(Errc::Overflow, std::to_string(a) + " + " + std::to_string(b) + " leaves int64");
    return out;
}

bool divides_int(std::int64_t a, std::int64_t b) { return a != 0 && b % a == 0; }

bool strictly_divides_int(std::int64_t a, std::int64_t b) { return divides_int(a, b) && ! divides_int(b, a); }

SubsetMask low_bits(std::size_t count) { return count >= 64 ? ~SubsetMask{0} : (SubsetMask{1} << count) - 1; }

/// Strict order given by a predicate, assembled into graph and poset in one pass.
template <typename Less>
OrderedGraph order_from_strict(std::size_t size, std::vector<std::string> labels, Less less)
{
    BitMatrix leq(size);
    Graph g(size, std::move(labels));
    for (Vertex a = 0; a < size; ++a) {
        leq.set(a, a);
        for (Vertex b = 0; b < size; ++b)
            if (a != b && less(a, b)) {
                leq.set(a, b);
                g.add_edge(a, b);
            }
    }
    return {Poset::from_trusted(std::move(leq)), std::move(g)};
}

} // namespace

std::int64_t gcd_abs(std::int64_t a, std::int64_t b)
{
    return static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a), static_cast<std::uint64_t>(b < 0 ? -b : b)));
}

std::vector<std::int64_t> first_primes(std::size_t count)
{
    std::vector<std::int64_t> primes;
    for (std::int64_t c = 2; primes.size() < count; ++c) {
        bool prime = true;
        for (auto p : primes) {
            if (p * p > c)
                break;
            if (c % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime)
            primes.push_back(c);
    }
    return primes;
}

// ---- perfect divisor graphs ------------------------------------------------

PdgSpec::PdgSpec(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli))
{
    if (moduli_.size() < 2)
        throw Error(Errc::TooSmall, "a perfect divisor graph needs at least 2 moduli, got " + std::to_string(moduli_.size()));
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        if (moduli_[i] == 0 || moduli_[i] == 1 || moduli_[i] == -1 || moduli_[i] == INT64_MIN)
            throw Error(Errc::ImproperModulus, "modulus " + std::to_string(i + 1) + " = " + std::to_string(moduli_[i]));
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        for (std::size_t j = i + 1; j < moduli_.size(); ++j)
            if (gcd_abs(moduli_[i], moduli_[j]) != 1)
                throw Error(Errc::NotCoprime, "moduli (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
}

std::string pdg_label(SubsetMask mask)
{
    std::string out;
    for (std::size_t i = 0; mask >> i; ++i)
        if ((mask >> i) & 1U) {
            if (! out.empty())
                out += '*';
            out += "m" + std::to_string(i + 1);
        }
    return out;
}

std::optional<std::int64_t> pdg_value(const PdgSpec & spec, SubsetMask mask)
{
    std::int64_t value = 1;
    for (std::size_t i = 0; i < spec.size(); ++i)
        if ((mask >> i) & 1U)
            if (__builtin_mul_overflow(value, spec.moduli()[i], &value))
                return std::nullopt;
    return value;
}

OrderedGraph pdg_family(const PdgSpec & spec)
{
    const auto n = spec.size();
    if (n > max_pdg_moduli)
        throw Error(Errc::SizeLimitExceeded,
            std::to_string(n) + " moduli; the generator stops at " + std::to_string(max_pdg_moduli));
    const SubsetMask full = low_bits(n);
    const std::size_t size = static_cast<std::size_t>(full) - 1;

    std::vector<std::string> labels;
    labels.reserve(size);
    for (Vertex v = 0; v < size; ++v)
        labels.push_back(pdg_label(pdg_mask(v)));

    BitMatrix leq(size);
    Graph g(size, std::move(labels));
    for (SubsetMask b = 1; b < full; ++b) {
        leq.set(pdg_vertex(b), pdg_vertex(b));
        for (SubsetMask a = (b - 1) & b; a != 0; a = (a - 1) & b) {
            leq.set(pdg_vertex(a), pdg_vertex(b));
            g.add_edge(pdg_vertex(a), pdg_vertex(b));
        }
    }
    return {Poset::from_trusted(std::move(leq)), std::move(g)};
}

Graph pdg_graph(const PdgSpec & spec) { return pdg_family(spec).graph; }

PdgProperties pdg_expected_properties(std::size_t n)
{
    if (n < 2 || n > 62)
        throw Error(Errc::InvalidArgument, "pdg properties need 2 <= n <= 62, got " + std::to_string(n));
    PdgProperties p;
    p.vertex_count = (std::uint64_t{1} << n) - 2;
    p.connected = n >= 3;
    p.diameter = n >= 3 ? Distance(3) : Distance::infinite();
    p.domination = 2;
    p.parts = n - 1;
    for (std::size_t k = 1; k < n; ++k)
        p.degree_by_size.push_back((std::uint64_t{1} << k) + (std::uint64_t{1} << (n - k)) - 4);
    p.girth = n == 2 ? Distance::infinite() : n == 3 ? Distance(6) : Distance(3);
    p.planar = n <= 4;
    return p;
}

PdgK33 pdg_k33_certificate(std::size_t n)
{
    if (n < 5)
        throw Error(Errc::TooSmall, "the K3,3 certificate needs n >= 5, got " + std::to_string(n));
    return {{0b00111, 0b01011, 0b10011}, {0b00001, 0b00010, 0b00011}};
}

std::vector<Vertex> PdgExtremal::vertices() const
{
    std::vector<Vertex> out;
    for (const auto & block : blocks)
        for (auto mask : block)
            out.push_back(pdg_vertex(mask));
    return out;
}

PdgExtremal pdg_extremal(const RamseyQuery & q)
{
    if (q.n() < 2 || q.m() < 2)
        throw Error(Errc::DegenerateQuery, "the pdg construction needs n, m >= 2");
    const std::size_t w = (q.n() - 1) * (q.m() - 1);
    if (w + 1 > 62)
        throw Error(Errc::SizeLimitExceeded, "(n-1)(m-1) = " + std::to_string(w) + " primes");

    PdgExtremal out{PdgSpec(first_primes(q.m() == 2 ? w + 1 : w)), {}};
    for (std::size_t i = 1; i < q.n(); ++i) {
        const std::size_t k = (i - 1) * (q.m() - 1);
        std::vector<SubsetMask> block;
        for (std::size_t j = 1; j < q.m(); ++j)
            block.push_back(low_bits(k) | (SubsetMask{1} << (k + j - 1)));
        out.blocks.push_back(std::move(block));
    }
    return out;
}

// ---- Z_n ------------------------------------------------------------------

ZnElement::ZnElement(std::uint64_t modulus, std::uint64_t value) : modulus_(modulus), value_(value)
{
    if (modulus < 2)
        throw Error(Errc::InvalidArgument, "modulus must be at least 2, got " + std::to_string(modulus));
    if (value >= modulus)
        throw Error(Errc::InvalidArgument,
            "residue " + std::to_string(value) + " is not reduced modulo " + std::to_string(modulus));
}

bool ZnElement::is_proper() const noexcept { return value_ != 0 && std::gcd(value_, modulus_) > 1; }

bool divides_zn(const ZnElement & a, const ZnElement & b)
{
    if (a.modulus() != b.modulus())
        throw Error(Errc::ModulusMismatch, std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()));
    return b.value() % std::gcd(a.value(), a.modulus()) == 0;
}

bool strictly_divides_zn(const ZnElement & a, const ZnElement & b) { return divides_zn(a, b) && ! divides_zn(b, a); }

namespace {

void check_zn_modulus(std::uint64_t n)
{
    if (n < 2 || n > max_zn_modulus)
        throw Error(Errc::InvalidArgument,
            "modulus must lie in [2, " + std::to_string(max_zn_modulus) + "], got " + std::to_string(n));
}

} // namespace

OrderedGraph divisibility_graph_zn(std::uint64_t n)
{
    check_zn_modulus(n);
    std::vector<ZnElement> elements;
    std::vector<std::string> labels;
    for (std::uint64_t v = 1; v < n; ++v)
        if (ZnElement e(n, v); e.is_proper()) {
            elements.push_back(e);
            labels.push_back(std::to_string(v));
        }
    if (elements.empty())
        throw Error(Errc::NoProperElements, "Z_" + std::to_string(n) + " is a field");
    return order_from_strict(elements.size(), std::move(labels),
        [&](Vertex a, Vertex b) { return strictly_divides_zn(elements[a], elements[b]); });
}

OrderedGraph inclusion_ideal_graph_zn(std::uint64_t n)
{
    check_zn_modulus(n);
    std::vector<std::uint64_t> divisors;
    std::vector<std::string> labels;
    for (std::uint64_t d = 2; d < n; ++d)
        if (n % d == 0) {
            divisors.push_back(d);
            labels.push_back(std::to_string(d));
        }
    if (divisors.empty())
        throw Error(Errc::NoNontrivialIdeals, "Z_" + std::to_string(n) + " is a field");
    // dZ_n contains eZ_n exactly when d | e; the order runs from the larger ideal down.
    return order_from_strict(divisors.size(), std::move(labels),
        [&](Vertex a, Vertex b) { return divisors[b] % divisors[a] == 0; });
}

// ---- integer matrices -----------------------------------------------------

std::int64_t determinant(std::size_t dim, std::span<const std::int64_t> entries)
{
    if (entries.size() != dim * dim)
        throw Error(Errc::DimensionMismatch,
            std::to_string(entries.size()) + " entries for dimension " + std::to_string(dim));
    if (dim == 0)
        return 1;

    std::vector<__int128> a(entries.begin(), entries.end());
    auto at = [&](std::size_t r, std::size_t c) -> __int128 & { return a[r * dim + c]; };
    constexpr __int128 limit = static_cast<__int128>(INT64_MAX);
    auto fits = [&](__int128 x) { return x <= limit && x >= -limit - 1; };

    int sign = 1;
    __int128 prev = 1;
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < dim && at(swap, k) == 0)
                ++swap;
            if (swap == dim)
                return 0;
            for (std::size_t c = 0; c < dim; ++c)
                std::swap(at(k, c), at(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < dim; ++i)
            for (std::size_t j = k + 1; j < dim; ++j) {
                // Bareiss minors are exact; checking both factors keeps the product inside 128 bits.
                if (! fits(at(i, j)) || ! fits(at(k, k)) || ! fits(at(i, k)) || ! fits(at(k, j)))
                    throw Error(Errc::Overflow, "determinant intermediate leaves int64");
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            }
        prev = at(k, k);
    }
    __int128 det = at(dim - 1, dim - 1) * sign;
    if (! fits(det))
        throw Error(Errc::Overflow, "determinant leaves int64");
    return static_cast<std::int64_t>(det);
}

IntMatrix::IntMatrix(std::size_t dim, std::vector<std::int64_t> entries) : dim_(dim), entries_(std::move(entries)), det_(0)
{
    if (dim < 1)
        throw Error(Errc::InvalidArgument, "matrix dimension must be at least 1");
    det_ = determinant(dim_, entries_);
}

IntMatrix IntMatrix::identity(std::size_t dim)
{
    std::vector<std::int64_t> e(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
        e[i * dim + i] = 1;
    return IntMatrix(dim, std::move(e));
}

IntMatrix operator*(const IntMatrix & a, const IntMatrix & b)
{
    if (a.dim() != b.dim())
        throw Error(Errc::DimensionMismatch, std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    const auto d = a.dim();
    std::vector<std::int64_t> e(d * d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::int64_t sum = 0;
            for (std::size_t k = 0; k < d; ++k)
                sum = checked_add(sum, checked_mul(a.at(i, k), b.at(k, j)));
            e[i * d + j] = sum;
        }
    return IntMatrix(d, std::move(e));
}

IntMatrix matrix_with_det(std::size_t dim, std::int64_t d)
{
    if (dim < 2)
        throw Error(Errc::InvalidArgument, "matrix dimension must be at least 2, got " + std::to_string(dim));
    auto m = IntMatrix::identity(dim).entries();
    m[0] = d;
    return IntMatrix(dim, std::move(m));
}

OrderedGraph matrix_graph(std::span<const IntMatrix> matrices)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        if (matrices[i].dim() != matrices.front().dim())
            throw Error(Errc::DimensionMismatch, "matrix " + std::to_string(i) + " has dimension "
                    + std::to_string(matrices[i].dim()) + ", expected " + std::to_string(matrices.front().dim()));
        auto d = matrices[i].det();
        if (d == 0 || d == 1 || d == -1)
            throw Error(Errc::ImproperDeterminant, "matrix " + std::to_string(i) + " has determinant " + std::to_string(d));
        labels.push_back("det=" + std::to_string(d));
    }
    return order_from_strict(matrices.size(), std::move(labels),
        [&](Vertex a, Vertex b) { return strictly_divides_int(matrices[a].det(), matrices[b].det()); });
}

MatrixExtremal matrix_extremal(const RamseyQuery & q, std::size_t dim)
{
    if (q.n() < 2 || q.m() < 2)
        throw Error(Errc::DegenerateQuery, "the matrix construction needs n, m >= 2");
    const std::size_t w = (q.n() - 1) * (q.m() - 1);
    const auto primes = first_primes(w);
    std::vector<IntMatrix> x;
    for (auto p : primes)
        x.push_back(matrix_with_det(dim, p));

    MatrixExtremal out;
    auto prefix = IntMatrix::identity(dim);
    for (std::size_t i = 1; i < q.n(); ++i) {
        const std::size_t k = (i - 1) * (q.m() - 1);
        std::vector<Vertex> block;
        for (std::size_t j = 1; j < q.m(); ++j) {
            block.push_back(out.matrices.size());
            out.matrices.push_back(prefix * x[k + j - 1]);
        }
        out.blocks.push_back(std::move(block));
        for (std::size_t j = 1; j < q.m(); ++j)
            prefix = prefix * x[k + j - 1];
    }
    return out;
}

// ---- idempotents ----------------------------------------------------------

std::string idempotent_label(SubsetMask mask, std::size_t width)
{
    std::string out(width, '0');
    for (std::size_t i = 0; i < width; ++i)
        if ((mask >> i) & 1U)
            out[i] = '1';
    return out;
}

bool idempotent_divides(SubsetMask a, SubsetMask b) noexcept { return (b & ~a) == 0; }

OrderedGraph idempotent_graph(std::size_t width)
{
    if (width < 1 || width > max_idempotent_width)
        throw Error(Errc::WidthLimitExceeded,
            "width " + std::to_string(width) + " outside [1, " + std::to_string(max_idempotent_width) + "]");
    const SubsetMask full = low_bits(width);
    const std::size_t size = static_cast<std::size_t>(full) + 1;

    std::vector<std::string> labels;
    labels.reserve(size);
    for (SubsetMask v = 0; v < size; ++v)
        labels.push_back(idempotent_label(v, width));

    // a <= b iff a | b iff support(b) inside support(a): walk the proper submasks b of each a.
    BitMatrix leq(size);
    Graph g(size, std::move(labels));
    for (SubsetMask a = 0; a <= full; ++a) {
        leq.set(a, a);
        if (a == 0)
            continue;
        for (SubsetMask b = (a - 1) & a;; b = (b - 1) & a) {
            leq.set(a, b);
            g.add_edge(a, b);
            if (b == 0)
                break;
        }
    }
    return {Poset::from_trusted(std::move(leq)), std::move(g)};
}

SubsetMask maximal_idempotent(std::size_t i, std::size_t width)
{
    if (i < 1 || i > width)
        throw Error(Errc::InvalidArgument, "coordinate " + std::to_string(i) + " outside [1, " + std::to_string(width) + "]");
    return low_bits(width) & ~(SubsetMask{1} << (i - 1));
}

SubsetMask idempotent_product(std::span<const SubsetMask> factors, std::size_t width)
{
    SubsetMask out = low_bits(width);
    for (auto f : factors)
        out &= f;
    return out;
}

std::vector<Vertex> IdempotentExtremal::vertices() const
{
    std::vector<Vertex> out;
    for (const auto & block : blocks)
        for (auto mask : block)
            out.push_back(static_cast<Vertex>(mask));
    return out;
}

IdempotentExtremal idempotent_extremal(const RamseyQuery & q)
{
    if (q.n() < 2 || q.m() < 2)
        throw Error(Errc::DegenerateQuery, "the idempotent construction needs n, m >= 2");
    const std::size_t w = (q.n() - 1) * (q.m() - 1);
    if (w > 62)
        throw Error(Errc::WidthLimitExceeded, "width " + std::to_string(w));

    IdempotentExtremal out;
    out.width = w;
    std::vector<SubsetMask> prefix; // p_1 .. p_{k_i}
    for (std::size_t i = 1; i < q.n(); ++i) {
        const std::size_t k = (i - 1) * (q.m() - 1);
        while (prefix.size() < k)
            prefix.push_back(maximal_idempotent(prefix.size() + 1, w));
        const auto a = idempotent_product(prefix, w);
        std::vector<SubsetMask> block;
        for (std::size_t j = 1; j < q.m(); ++j)
            block.push_back(a & maximal_idempotent(k + j, w));
        out.blocks.push_back(std::move(block));
    }
    return out;
}

} // namespace poramsey
