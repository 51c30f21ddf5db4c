#include "poramsey/cone_graphs.hpp"

#include "poramsey/error.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <string>

namespace poramsey {

ConeSpec::ConeSpec(std::int64_t k) : k_(k)
{
    if (k < 2)
        throw Error(Errc::InvalidArgument, "cone modulus must be at least 2, got " + std::to_string(k));
}

Window::Window(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi)
{
    if (lo > hi)
        throw Error(Errc::InvalidArgument, "empty window [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    if (static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) >= max_width)
        throw Error(Errc::SizeLimitExceeded, "window wider than " + std::to_string(max_width));
}

MembershipTest positive_multiples(std::int64_t k)
{
    ConeSpec spec(k);
    return [spec](std::int64_t x) { return spec.contains(x); };
}

AxiomReport semicone_axioms(std::span<const std::int64_t> sample, const MembershipTest & candidate, std::int64_t witness_search)
{
    AxiomReport report;

    if (! candidate(0))
        report.intersect_violation = 0;
    else
        for (auto s : sample)
            if (s != 0 && candidate(s) && candidate(-s)) {
                report.intersect_violation = std::llabs(s);
                break;
            }
    report.intersect_ok = ! report.intersect_violation;

    std::vector<std::int64_t> members;
    for (auto s : sample)
        if (candidate(s))
            members.push_back(s);
    report.add_closed = true;
    report.mul_closed = true;
    for (auto a : members)
        for (auto b : members) {
            std::int64_t sum = 0, product = 0;
            if (__builtin_add_overflow(a, b, &sum) || ! candidate(sum))
                report.add_closed = false;
            if (__builtin_mul_overflow(a, b, &product) || ! candidate(product))
                report.mul_closed = false;
        }

    std::int64_t bound = witness_search;
    for (auto s : sample)
        bound = std::max<std::int64_t>(bound, std::llabs(s) + witness_search);
    for (std::int64_t x = 0; x <= bound; ++x)
        if (! candidate(x) && ! candidate(-x)) {
            report.cone_witness = x;
            break;
        }
    return report;
}

OrderedGraph cone_family(const ConeSpec & spec, const Window & window)
{
    const auto size = window.size();
    std::vector<std::string> labels;
    for (Vertex v = 0; v < size; ++v)
        labels.push_back(std::to_string(window.value(v)));

    BitMatrix leq(size);
    Graph g(size, std::move(labels));
    const auto step = static_cast<std::size_t>(spec.k());
    for (Vertex a = 0; a < size; ++a) {
        leq.set(a, a);
        for (Vertex b = a + step; b < size; b += step) {
            leq.set(a, b);
            g.add_edge(a, b);
        }
    }
    return {Poset::from_trusted(std::move(leq)), std::move(g)};
}

Graph cone_graph(const ConeSpec & spec, const Window & window) { return cone_family(spec, window).graph; }

std::uint64_t cone_ramsey(const ConeSpec & spec, const RamseyQuery & q)
{
    const auto k = static_cast<std::uint64_t>(spec.k());
    const std::uint64_t n1 = q.n() - 1, m1 = q.m() - 1;
    return q.m() <= k + 1 ? n1 * m1 + 1 : n1 * k + 1;
}

std::vector<std::vector<std::int64_t>> cone_extremal(const ConeSpec & spec, const RamseyQuery & q)
{
    std::vector<std::vector<std::int64_t>> blocks;
    if (q.n() < 2 || q.m() < 2)
        return blocks;
    const auto k = spec.k();
    const auto count = std::min<std::int64_t>(static_cast<std::int64_t>(q.m()) - 1, k);
    for (std::int64_t i = 1; i <= count; ++i) {
        std::vector<std::int64_t> block;
        for (std::int64_t t = 1; t < static_cast<std::int64_t>(q.n()); ++t)
            block.push_back(t * k + i);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

namespace {

using Clock = std::chrono::steady_clock;

/// Calls visit(counts) for every vector of k nonnegative counts summing to total.
template <typename Visit>
void for_each_count_vector(std::size_t k, std::size_t total, Visit && visit)
{
    std::vector<std::size_t> counts(k, 0);
    auto rec = [&](auto & self, std::size_t index, std::size_t left) -> void {
        if (index + 1 == k) {
            counts[index] = left;
            visit(counts);
            return;
        }
        for (std::size_t c = 0; c <= left; ++c) {
            counts[index] = c;
            self(self, index + 1, left - c);
        }
    };
    rec(rec, 0, total);
}

/// Adjacency depends only on residues: K_n inside one class, or m distinct classes.
bool counts_hit_target(const std::vector<std::size_t> & counts, const RamseyQuery & q)
{
    std::size_t classes = 0, largest = 0;
    for (auto c : counts) {
        classes += c > 0 ? 1 : 0;
        largest = std::max(largest, c);
    }
    return largest >= q.n() || classes >= q.m();
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r, std::uint64_t cap)
{
    if (r > n)
        return 0;
    r = std::min(r, n - r);
    unsigned __int128 out = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        out = out * (n - r + i) / i;
        if (out > cap)
            return cap + 1;
    }
    return static_cast<std::uint64_t>(out);
}

std::vector<std::int64_t> values_of(const Window & w, std::span<const Vertex> vs)
{
    std::vector<std::int64_t> out;
    for (auto v : vs)
        out.push_back(w.value(v));
    return out;
}

} // namespace

ConeVerificationReport verify_cone(const ConeSpec & spec, const RamseyQuery & q, const ConeVerificationOptions & options)
{
    auto start = Clock::now();
    ConeVerificationReport report;
    report.spec = spec;
    report.query = q;
    report.formula = cone_ramsey(spec, q);
    if (report.formula > options.max_order)
        throw Error(Errc::CapExceeded, "cone Ramsey value " + std::to_string(report.formula) + " exceeds the cap of "
                + std::to_string(options.max_order));
    const auto k = static_cast<std::size_t>(spec.k());
    const auto r = static_cast<std::size_t>(report.formula);

    // Route 1: least total whose every residue count vector hits a target.
    const std::size_t ceiling = std::max(r, (q.n() - 1) * k + 1);
    report.exhaustive = 0;
    for (std::size_t s = 0; s <= ceiling && report.exhaustive == 0; ++s) {
        bool all_hit = true;
        for_each_count_vector(k, s, [&](const std::vector<std::size_t> & counts) {
            if (s == r)
                ++report.count_vectors;
            all_hit = all_hit && counts_hit_target(counts, q);
        });
        if (all_hit && s > 0)
            report.exhaustive = s;
    }
    report.vectors_pass = report.exhaustive == report.formula;

    // Route 2: actual induced subgraphs of the window [1, r k].
    const Window window(1, static_cast<std::int64_t>(r * k));
    const auto g = cone_graph(spec, window);
    report.subgraphs_pass = true;
    auto check_subset = [&](const std::vector<Vertex> & subset) {
        if (! has_clique_or_independent(induced_subgraph(g, subset), q)) {
            if (report.subgraphs_pass)
                report.counterexample = values_of(window, subset);
            report.subgraphs_pass = false;
        }
    };
    for_each_count_vector(k, r, [&](const std::vector<std::size_t> & counts) {
        // Window value v has residue class (v - 1) mod k, and class i holds vertices i, i+k, ...
        std::vector<Vertex> subset;
        for (std::size_t cls = 0; cls < k; ++cls)
            for (std::size_t t = 0; t < counts[cls]; ++t)
                subset.push_back(cls + t * k);
        std::sort(subset.begin(), subset.end());
        check_subset(subset);
    });
    if (binomial_saturating(g.size(), r, options.max_raw_subsets) <= options.max_raw_subsets) {
        std::vector<Vertex> subset(r);
        for (std::size_t i = 0; i < r; ++i)
            subset[i] = i;
        while (true) {
            ++report.raw_subsets;
            check_subset(subset);
            std::size_t i = r;
            while (i > 0 && subset[i - 1] == g.size() - r + i - 1)
                --i;
            if (i == 0)
                break;
            ++subset[i - 1];
            for (std::size_t j = i; j < r; ++j)
                subset[j] = subset[j - 1] + 1;
        }
    }

    // The extremal family on r - 1 integers.
    auto blocks = cone_extremal(spec, q);
    std::vector<std::int64_t> values;
    for (const auto & b : blocks)
        values.insert(values.end(), b.begin(), b.end());
    if (values.empty())
        report.extremal_avoids_both = r == 1;
    else {
        const Window ambient(1, *std::max_element(values.begin(), values.end()));
        const auto big = cone_graph(spec, ambient);
        std::vector<Vertex> vs;
        for (auto v : values)
            vs.push_back(static_cast<Vertex>(v - 1));
        report.extremal_avoids_both = values.size() == r - 1 && ! has_clique_or_independent(induced_subgraph(big, vs), q);
        if (! report.extremal_avoids_both && ! report.counterexample)
            report.counterexample = values;
    }

    report.all_pass = report.vectors_pass && report.subgraphs_pass && report.extremal_avoids_both;
    report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return report;
}

nlohmann::json to_json(const AxiomReport & r)
{
    return {
        {"intersect_ok", r.intersect_ok},
        {"add_closed", r.add_closed},
        {"mul_closed", r.mul_closed},
        {"cone_witness", r.cone_witness ? nlohmann::json(*r.cone_witness) : nlohmann::json(nullptr)},
    };
}

nlohmann::json to_json(const ConeVerificationReport & r)
{
    return {
        {"k", r.spec.k()},
        {"query", to_json(r.query)},
        {"order", r.formula},
        {"exhaustive_order", r.exhaustive},
        {"enumerated", r.count_vectors},
        {"raw_subsets", r.raw_subsets},
        {"vectors_pass", r.vectors_pass},
        {"subgraphs_pass", r.subgraphs_pass},
        {"extremal_avoids_both", r.extremal_avoids_both},
        {"all_pass", r.all_pass},
        {"counterexample", r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json(nullptr)},
        {"elapsed_ms", r.elapsed_ms},
    };
}

} // namespace poramsey
