#include "poramsey/ramsey.hpp"

#include "poramsey/error.hpp"
#include "poramsey/io.hpp"
#include "poramsey/poset_enum.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace poramsey {

RamseyQuery::RamseyQuery(std::size_t n, std::size_t m) : n_(n), m_(m)
{
    if (n < 1 || m < 1)
        throw Error(Errc::InvalidArgument,
            "Ramsey targets must be at least 1, got (" + std::to_string(n) + ", " + std::to_string(m) + ")");
}

std::uint64_t ramsey_po(const RamseyQuery & q)
{
    return static_cast<std::uint64_t>(q.n() - 1) * static_cast<std::uint64_t>(q.m() - 1) + 1;
}

RamseyWitness extract_witness(const OrientedGraph & order, std::span<const Vertex> subset, const RamseyQuery & q)
{
    auto needed = ramsey_po(q);
    if (subset.size() < needed)
        throw Error(Errc::SubsetTooSmall,
            std::to_string(subset.size()) + " vertices given, the pigeonhole bound needs " + std::to_string(needed));

    auto levels = mirsky_levels(order, subset);
    if (levels.max_level + 1 >= q.n()) {
        auto chain = longest_chain(levels);
        chain.resize(q.n());
        return {RamseyWitness::Kind::Clique, std::move(chain)};
    }

    for (std::size_t level = 0; level <= levels.max_level; ++level) {
        auto antichain = level_antichain(levels, level);
        if (antichain.size() >= q.m()) {
            antichain.resize(q.m());
            return {RamseyWitness::Kind::Independent, std::move(antichain)};
        }
    }
    // Fewer than n levels with fewer than m vertices each cannot hold the subset.
    throw Error(Errc::InvalidArgument, "no level is large enough; the input order is inconsistent");
}

RamseyWitness extract_witness(const Poset & p, std::span<const Vertex> subset, const RamseyQuery & q)
{
    return extract_witness(orient(p), subset, q);
}

namespace {

template <typename Related>
bool check_witness(std::size_t size, const RamseyWitness & w, const RamseyQuery & q, Related related)
{
    bool clique = w.kind == RamseyWitness::Kind::Clique;
    if (w.vertices.size() != (clique ? q.n() : q.m()))
        return false;
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (w.vertices[i] >= size)
            return false;
        for (std::size_t j = i + 1; j < w.vertices.size(); ++j) {
            auto a = w.vertices[i], b = w.vertices[j];
            if (a == b || related(a, b) != clique)
                return false;
        }
    }
    return true;
}

} // namespace

bool witness_is_valid(const Poset & p, const RamseyWitness & w, const RamseyQuery & q)
{
    return check_witness(p.size(), w, q, [&](Vertex a, Vertex b) { return p.comparable(a, b); });
}

bool witness_is_valid(const Graph & g, const RamseyWitness & w, const RamseyQuery & q)
{
    return check_witness(g.size(), w, q, [&](Vertex a, Vertex b) { return g.adjacent(a, b); });
}

ExtremalPo extremal_po_graph(const RamseyQuery & q)
{
    if (q.n() < 2 || q.m() < 2)
        throw Error(Errc::DegenerateQuery, "the extremal order needs n, m >= 2");

    const auto blocks = q.n() - 1;
    const auto width = q.m() - 1;
    auto block_of = [width](Vertex v) { return v / width; };

    ExtremalPo out;
    out.partition.n = q.n();
    out.partition.m = q.m();
    out.partition.blocks.resize(blocks);
    std::vector<std::string> labels;
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t j = 0; j < width; ++j) {
            out.partition.blocks[b].push_back(b * width + j);
            labels.push_back("A" + std::to_string(b + 1) + "_" + std::to_string(j + 1));
        }

    out.poset = poset_from_relation(blocks * width, [&](Vertex a, Vertex b) { return block_of(a) < block_of(b); });
    out.graph = comparability_graph(out.poset, std::move(labels));
    return out;
}

std::optional<std::uint64_t> classical_ramsey(const RamseyQuery & q)
{
    auto lo = std::min(q.n(), q.m()), hi = std::max(q.n(), q.m());
    if (lo == 1)
        return 1;
    if (lo == 2)
        return hi;
    struct Known {
        std::size_t a, b;
        std::uint64_t value;
    };
    static constexpr Known known[] = {{3, 3, 6}, {3, 4, 9}, {3, 5, 14}, {3, 6, 18}, {3, 7, 23}, {3, 8, 28}, {3, 9, 36},
        {4, 4, 18}, {4, 5, 25}};
    for (const auto & k : known)
        if (k.a == lo && k.b == hi)
            return k.value;
    return std::nullopt;
}

bool has_clique_or_independent(const Graph & g, const RamseyQuery & q)
{
    SearchLimits limits{std::max<std::size_t>(g.size(), 64)};
    return clique_number(g, limits) >= q.n() || independence_number(g, limits) >= q.m();
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct PosetShardResult {
    std::uint64_t enumerated = 0;
    std::optional<Poset> failure;
};

} // namespace

VerificationReport verify_po_class(const RamseyQuery & q, const EnumerationOptions & options)
{
    auto start = Clock::now();
    auto r = ramsey_po(q);
    if (r > options.max_poset_order || r > max_enumerable_order)
        throw Error(Errc::CapExceeded, "order " + std::to_string(r) + " exceeds the poset enumeration cap of "
                + std::to_string(options.max_poset_order));

    VerificationReport report;
    report.query = q;
    report.order = r;

    auto shards = map_shards<PosetShardResult>(poset_shard_count(r), options.workers, [&](std::size_t shard) {
        PosetShardResult result;
        const auto everything = all_vertices(r);
        for_each_poset_in_shard(r, shard, [&](const Poset & p) {
            ++result.enumerated;
            if (result.failure)
                return;
            bool ok = false;
            try {
                ok = witness_is_valid(p, extract_witness(p, everything, q), q);
            }
            catch (const Error &) {
                ok = false;
            }
            if (! ok)
                result.failure = p;
        });
        return result;
    });

    report.witnesses_valid = true;
    for (auto & s : shards) {
        report.enumerated += s.enumerated;
        if (s.failure && report.witnesses_valid) {
            report.witnesses_valid = false;
            report.counterexample = comparability_graph(*s.failure);
        }
    }

    if (q.n() < 2 || q.m() < 2)
        report.extremal_avoids_both = true; // r - 1 = 0 vertices
    else {
        auto ex = extremal_po_graph(q);
        report.extremal_avoids_both = ex.poset.size() == r - 1 && ex.graph == comparability_graph(ex.poset, ex.graph.labels())
            && ! has_clique_or_independent(ex.graph, q);
        if (! report.extremal_avoids_both && ! report.counterexample)
            report.counterexample = ex.graph;
    }

    report.all_pass = report.witnesses_valid && report.extremal_avoids_both;
    report.elapsed_ms = ms_since(start);
    return report;
}

namespace {

struct GraphShardResult {
    std::uint64_t enumerated = 0;
    std::optional<Graph> counterexample;
};

} // namespace

SearchReport general_ramsey_search(const RamseyQuery & q, std::size_t order, const EnumerationOptions & options)
{
    auto start = Clock::now();
    if (order > options.max_graph_order || order > 11)
        throw Error(Errc::CapExceeded, "graph order " + std::to_string(order) + " exceeds the enumeration cap of "
                + std::to_string(options.max_graph_order));

    // Pair index t <-> bit t; the first order-1 pairs are the edges at vertex 0.
    std::vector<Edge> pairs;
    for (Vertex a = 0; a < order; ++a)
        for (Vertex b = a + 1; b < order; ++b)
            pairs.emplace_back(a, b);
    const std::size_t shard_bits = order == 0 ? 0 : order - 1;
    const std::size_t rest_bits = pairs.size() - shard_bits;

    auto shards = map_shards<GraphShardResult>(std::size_t{1} << shard_bits, options.workers, [&](std::size_t shard) {
        GraphShardResult result;
        for (std::uint64_t high = 0; high < (std::uint64_t{1} << rest_bits); ++high) {
            auto code = shard | (high << shard_bits);
            Graph g(order);
            for (std::size_t t = 0; t < pairs.size(); ++t)
                if ((code >> t) & 1U)
                    g.add_edge(pairs[t].first, pairs[t].second);
            ++result.enumerated;
            if (! result.counterexample && ! has_clique_or_independent(g, q))
                result.counterexample = std::move(g);
        }
        return result;
    });

    SearchReport report;
    report.query = q;
    report.order = order;
    for (auto & s : shards) {
        report.enumerated += s.enumerated;
        if (s.counterexample && ! report.counterexample)
            report.counterexample = std::move(s.counterexample);
    }
    report.all_pass = ! report.counterexample;
    report.elapsed_ms = ms_since(start);
    return report;
}

nlohmann::json to_json(const RamseyQuery & q) { return {{"n", q.n()}, {"m", q.m()}}; }

nlohmann::json to_json(const RamseyWitness & w)
{
    return {{"kind", w.kind == RamseyWitness::Kind::Clique ? "clique" : "independent"}, {"vertices", w.vertices}};
}

nlohmann::json to_json(const VerificationReport & r)
{
    return {
        {"query", to_json(r.query)},
        {"order", r.order},
        {"enumerated", r.enumerated},
        {"all_pass", r.all_pass},
        {"witnesses_valid", r.witnesses_valid},
        {"extremal_avoids_both", r.extremal_avoids_both},
        {"counterexample", r.counterexample ? graph_to_json(*r.counterexample) : nlohmann::json(nullptr)},
        {"elapsed_ms", r.elapsed_ms},
    };
}

nlohmann::json to_json(const SearchReport & r)
{
    return {
        {"query", to_json(r.query)},
        {"order", r.order},
        {"enumerated", r.enumerated},
        {"all_pass", r.all_pass},
        {"counterexample", r.counterexample ? graph_to_json(*r.counterexample) : nlohmann::json(nullptr)},
        {"elapsed_ms", r.elapsed_ms},
    };
}

} // namespace poramsey
