#include "suite.hpp"

#include "poramsey/cone_graphs.hpp"
#include "poramsey/error.hpp"
#include "poramsey/planarity.hpp"
#include "poramsey/poset_enum.hpp"
#include "poramsey/ring_graphs.hpp"

#include <bit>
#include <chrono>
#include <map>
#include <numeric>

namespace poramsey::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    nlohmann::json detail;
};

class Runner {
public:
    Runner(std::string theorem, const std::function<void(const ClaimResult &)> & emit) : theorem_(std::move(theorem)), emit_(emit) {}

    template <typename Fn>
    void claim(const std::string & name, Fn && fn)
    {
        auto start = Clock::now();
        Outcome outcome;
        try {
            outcome = fn();
        }
        catch (const Error & e) {
            outcome = {false, {{"error", e.what()}}};
        }
        ClaimResult r{theorem_, name, outcome.pass,
            std::chrono::duration<double, std::milli>(Clock::now() - start).count(), std::move(outcome.detail)};
        all_pass_ = all_pass_ && r.pass;
        emit_(r);
    }

    [[nodiscard]] bool all_pass() const noexcept { return all_pass_; }

private:
    std::string theorem_;
    const std::function<void(const ClaimResult &)> & emit_;
    bool all_pass_ = true;
};

std::string pair_name(std::size_t n, std::size_t m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

nlohmann::json distance_json(const Distance & d)
{
    return d.is_finite() ? nlohmann::json(d.value()) : nlohmann::json("inf");
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_or(const SuiteOptions & o, std::size_t lo,
    const std::function<bool(std::size_t, std::size_t)> & keep, std::size_t hi)
{
    if (o.n && o.m)
        return {{*o.n, *o.m}};
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t n = lo; n <= hi; ++n)
        for (std::size_t m = lo; m <= hi; ++m)
            if ((! o.n || *o.n == n) && (! o.m || *o.m == m) && keep(n, m))
                out.emplace_back(n, m);
    return out;
}

// ---- comparability class ----------------------------------------------------

void po_class(const SuiteOptions & o, Runner & run)
{
    const auto cap = o.enumeration.max_poset_order;
    const std::uint64_t known[] = {1, 1, 3, 19, 219, 4231, 130023, 6129859};
    for (std::size_t order = 1; order <= std::min<std::size_t>(cap, 7); ++order)
        run.claim("labeled poset count at order " + std::to_string(order), [&] {
            auto count = count_labeled_posets(order, o.enumeration.workers);
            return Outcome{count == known[order], {{"count", count}, {"expected", known[order]}}};
        });
    auto pairs = pairs_or(o, 1, [&](std::size_t n, std::size_t m) { return ramsey_po({n, m}) <= cap; }, cap + 1);
    for (auto [n, m] : pairs)
        run.claim("every poset of order (n-1)(m-1)+1 has the witness and the extremal order avoids both " + pair_name(n, m), [&] {
            auto r = verify_po_class({n, m}, o.enumeration);
            return Outcome{r.all_pass, to_json(r)};
        });
}

// ---- perfect divisor graphs ---------------------------------------------------

void pdg_properties(const SuiteOptions & o, Runner & run)
{
    std::vector<std::size_t> ns;
    if (o.n)
        ns.push_back(*o.n);
    else
        for (std::size_t n = 2; n <= 6; ++n)
            ns.push_back(n);

    for (auto n : ns) {
        const auto tag = " (n=" + std::to_string(n) + ")";
        auto expected = pdg_expected_properties(n);
        auto g = pdg_graph(PdgSpec(first_primes(n)));
        SearchLimits limits{std::max<std::size_t>(g.size(), 64)};

        run.claim("connected iff n >= 3" + tag, [&] {
            bool c = is_connected(g);
            return Outcome{c == expected.connected, {{"connected", c}}};
        });
        run.claim("diameter" + tag, [&] {
            auto d = diameter(g);
            return Outcome{d == expected.diameter, {{"diameter", distance_json(d)}, {"expected", distance_json(expected.diameter)}}};
        });
        run.claim("domination number 2" + tag, [&] {
            auto d = domination_number(g, limits);
            return Outcome{d == expected.domination, {{"domination", d}}};
        });
        run.claim("subset-size classes give an (n-1)-partition" + tag, [&] {
            std::vector<std::vector<Vertex>> classes(n - 1);
            for (Vertex v = 0; v < g.size(); ++v)
                classes[std::popcount(pdg_mask(v)) - 1].push_back(v);
            bool ok = g.size() == expected.vertex_count && classes.size() == expected.parts;
            for (const auto & c : classes)
                ok = ok && ! c.empty() && is_independent_set(g, c);
            auto omega = clique_number(g, limits);
            ok = ok && omega == n - 1;
            return Outcome{ok, {{"vertices", g.size()}, {"classes", classes.size()}, {"clique_number", omega}}};
        });
        run.claim("degree 2^k + 2^(n-k) - 4" + tag, [&] {
            bool ok = true;
            for (Vertex v = 0; v < g.size(); ++v)
                ok = ok && degree(g, v) == expected.degree_by_size[std::popcount(pdg_mask(v)) - 1];
            return Outcome{ok, {{"degree_by_size", expected.degree_by_size}}};
        });
        run.claim("girth" + tag, [&] {
            auto gi = girth(g);
            return Outcome{gi == expected.girth, {{"girth", distance_json(gi)}, {"expected", distance_json(expected.girth)}}};
        });
        run.claim("planar iff n <= 4" + tag, [&] {
            auto p = is_planar(g);
            bool ok = p.planar == expected.planar;
            nlohmann::json detail{{"planar", p.planar}};
            if (n >= 5) {
                auto cert = pdg_k33_certificate(n);
                std::array<Vertex, 3> left{}, right{};
                for (std::size_t i = 0; i < 3; ++i) {
                    left[i] = pdg_vertex(cert.left[i]);
                    right[i] = pdg_vertex(cert.right[i]);
                }
                bool valid = validate_certificate(g, k33_certificate(g, left, right));
                ok = ok && valid;
                std::vector<std::string> labels;
                for (auto mask : cert.left)
                    labels.push_back(pdg_label(mask));
                for (auto mask : cert.right)
                    labels.push_back(pdg_label(mask));
                detail["k33"] = labels;
                detail["k33_valid"] = valid;
            }
            else if (p.planar)
                ok = ok && validate_embedding(g, p.embedding);
            return Outcome{ok, detail};
        });
    }
}

/// Shared shape of the extremal checks: the block graph is complete
/// (n-1)-partite with omega = n-1, alpha = m-1, and any extra ambient vertex
/// forces a witness.
Outcome check_extremal(const OrderedGraph & ambient, const std::vector<std::vector<Vertex>> & blocks, const RamseyQuery & q)
{
    std::vector<Vertex> base;
    for (const auto & b : blocks)
        base.insert(base.end(), b.begin(), b.end());
    auto h = induced_subgraph(ambient.graph, base);

    std::vector<std::size_t> block_of;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        block_of.insert(block_of.end(), blocks[i].size(), i);
    bool multipartite = true;
    for (Vertex a = 0; a < h.size(); ++a)
        for (Vertex b = a + 1; b < h.size(); ++b)
            if (h.adjacent(a, b) != (block_of[a] != block_of[b]))
                multipartite = false;

    auto omega = clique_number(h);
    auto alpha = independence_number(h);

    auto order = orient(ambient.poset);
    std::size_t extras = 0;
    bool witnesses = true;
    std::vector<bool> used(ambient.graph.size(), false);
    for (auto v : base)
        used[v] = true;
    for (Vertex extra = 0; extra < ambient.graph.size(); ++extra) {
        if (used[extra])
            continue;
        ++extras;
        auto subset = base;
        subset.push_back(extra);
        witnesses = witnesses && witness_is_valid(ambient.graph, extract_witness(order, subset, q), q);
    }

    bool ok = multipartite && blocks.size() == q.n() - 1 && omega == q.n() - 1 && alpha == q.m() - 1 && witnesses
        && base.size() == ramsey_po(q) - 1;
    return {ok, {{"complete_multipartite", multipartite}, {"parts", blocks.size()}, {"clique_number", omega},
                    {"independence_number", alpha}, {"extra_vertices", extras}, {"witnesses_valid", witnesses}}};
}

bool sharp_pair(std::size_t n, std::size_t m) { return n >= 2 && m >= 2 && (n - 1) * (m - 1) <= 12; }

void pdg_extremal_group(const SuiteOptions & o, Runner & run)
{
    for (auto [n, m] : pairs_or(o, 2, sharp_pair, 13)) {
        RamseyQuery q(n, m);
        run.claim("pdg blocks are complete (n-1)-partite and one more vertex forces a witness " + pair_name(n, m), [&] {
            auto ex = pdg_extremal(q);
            auto ambient = pdg_family(ex.spec);
            std::vector<std::vector<Vertex>> blocks;
            for (const auto & b : ex.blocks) {
                blocks.emplace_back();
                for (auto mask : b)
                    blocks.back().push_back(pdg_vertex(mask));
            }
            return check_extremal(ambient, blocks, q);
        });
        run.claim("determinant matrices reproduce the pdg blocks " + pair_name(n, m), [&] {
            auto mx = matrix_extremal(q, 2);
            auto ex = pdg_extremal(q);
            auto mg = matrix_graph(mx.matrices).graph;
            auto pg = induced_subgraph(pdg_graph(ex.spec), ex.vertices());
            bool ok = mg.edges() == pg.edges();
            auto vs = ex.vertices();
            for (Vertex v = 0; v < vs.size() && ok; ++v)
                ok = mx.matrices[v].det() == *pdg_value(ex.spec, pdg_mask(vs[v]));
            return Outcome{ok, {{"vertices", mg.size()}}};
        });
    }
}

void idempotent_group(const SuiteOptions & o, Runner & run)
{
    for (auto [n, m] : pairs_or(o, 2, sharp_pair, 13)) {
        RamseyQuery q(n, m);
        run.claim("idempotent blocks are complete (n-1)-partite and one more vertex forces a witness " + pair_name(n, m), [&] {
            auto ex = idempotent_extremal(q);
            auto ambient = idempotent_graph(ex.width);
            std::vector<std::vector<Vertex>> blocks;
            for (const auto & b : ex.blocks)
                blocks.emplace_back(b.begin(), b.end());
            return check_extremal(ambient, blocks, q);
        });
    }
}

// ---- semi-cone graphs ---------------------------------------------------------

void cone_group(const SuiteOptions & o, Runner & run)
{
    std::vector<std::int64_t> ks;
    if (o.k)
        ks.push_back(*o.k);
    else
        ks = {2, 3, 4};
    for (auto k : ks) {
        ConeSpec spec(k);
        for (auto [n, m] : pairs_or(o, 1, [](std::size_t, std::size_t) { return true; }, 5))
            run.claim("closed form equals residue-pattern search (k=" + std::to_string(k) + ") " + pair_name(n, m), [&] {
                auto r = verify_cone(spec, {n, m});
                return Outcome{r.all_pass, to_json(r)};
            });
    }
    run.claim("k=3: (5,3) and (3,5) differ", [] {
        ConeSpec three(3);
        auto a = cone_ramsey(three, {5, 3}), b = cone_ramsey(three, {3, 5});
        return Outcome{a == 9 && b == 7, {{"forward", a}, {"backward", b}}};
    });
    run.claim("k=3 window [1,12] is three 4-cliques", [] {
        auto g = cone_graph(ConeSpec(3), Window(1, 12));
        auto comps = connected_components(g);
        bool ok = comps.size() == 3;
        for (const auto & c : comps)
            ok = ok && c.size() == 4 && is_clique(g, c);
        return Outcome{ok, {{"components", comps.size()}}};
    });
}

// ---- classical Ramsey contrast ------------------------------------------------

void classical_group(const SuiteOptions & o, Runner & run)
{
    auto opts = o.enumeration;
    opts.max_graph_order = std::max<std::size_t>(opts.max_graph_order, 6);
    run.claim("every graph on 6 vertices has K3 or 3 independent", [&] {
        auto r = general_ramsey_search({3, 3}, 6, opts);
        return Outcome{r.all_pass && r.enumerated == 32768, to_json(r)};
    });
    run.claim("some graph on 5 vertices has neither", [&] {
        auto r = general_ramsey_search({3, 3}, 5, opts);
        return Outcome{! r.all_pass && r.counterexample && ! has_clique_or_independent(*r.counterexample, {3, 3}), to_json(r)};
    });
    run.claim("comparability graphs already reach the target at 5", [&] {
        auto r = verify_po_class({3, 3}, o.enumeration);
        return Outcome{r.all_pass && r.order == 5, to_json(r)};
    });
}

// ---- oracle equivalences ------------------------------------------------------

void oracle_group(const SuiteOptions &, Runner & run)
{
    run.claim("Z_n divisibility by gcd equals multiplier search for n <= 200", [] {
        std::uint64_t pairs = 0;
        for (std::uint64_t n = 2; n <= 200; ++n)
            for (std::uint64_t a = 0; a < n; ++a) {
                std::vector<bool> reach(n, false);
                for (std::uint64_t x = 0; x < n; ++x)
                    reach[a * x % n] = true;
                for (std::uint64_t b = 0; b < n; ++b, ++pairs)
                    if (divides_zn({n, a}, {n, b}) != reach[b])
                        return Outcome{false, {{"n", n}, {"a", a}, {"b", b}}};
            }
        return Outcome{true, {{"pairs", pairs}}};
    });
    run.claim("pdg edges by containment equal edges by integer divisibility for n <= 6", [] {
        for (std::size_t n = 2; n <= 6; ++n) {
            PdgSpec spec(first_primes(n));
            auto g = pdg_graph(spec);
            for (Vertex a = 0; a < g.size(); ++a)
                for (Vertex b = a + 1; b < g.size(); ++b) {
                    auto x = *pdg_value(spec, pdg_mask(a)), y = *pdg_value(spec, pdg_mask(b));
                    if (g.adjacent(a, b) != (y % x == 0 || x % y == 0))
                        return Outcome{false, {{"n", n}, {"a", g.label(a)}, {"b", g.label(b)}}};
                }
        }
        return Outcome{true, nullptr};
    });
    run.claim("every generator's graph is the comparability graph of its order", [] {
        std::vector<std::pair<std::string, OrderedGraph>> families;
        for (std::size_t n = 2; n <= 6; ++n)
            families.emplace_back("pdg n=" + std::to_string(n), pdg_family(PdgSpec(first_primes(n))));
        for (std::uint64_t n : {4, 8, 12, 30, 36, 60, 72, 100})
            families.emplace_back("div Z_" + std::to_string(n), divisibility_graph_zn(n));
        for (std::uint64_t n : {4, 12, 30, 36, 60, 72, 100})
            families.emplace_back("ideal Z_" + std::to_string(n), inclusion_ideal_graph_zn(n));
        for (std::size_t w = 1; w <= 6; ++w)
            families.emplace_back("idempotent w=" + std::to_string(w), idempotent_graph(w));
        families.emplace_back("matrix (3,4)", matrix_graph(matrix_extremal({3, 4}, 2).matrices));
        families.emplace_back("cone k=3 [1,12]", cone_family(ConeSpec(3), Window(1, 12)));
        families.emplace_back("cone k=4 [-5,20]", cone_family(ConeSpec(4), Window(-5, 20)));
        for (auto & [name, og] : families) {
            auto checked = validate_poset(og.poset.relation());
            if (comparability_graph(checked, og.graph.labels()) != og.graph)
                return Outcome{false, {{"family", name}}};
        }
        return Outcome{true, {{"families", families.size()}}};
    });
}

using Group = void (*)(const SuiteOptions &, Runner &);

const std::map<std::string, Group> & groups()
{
    static const std::map<std::string, Group> table{
        {"po-class", po_class},
        {"pdg-properties", pdg_properties},
        {"pdg-extremal", pdg_extremal_group},
        {"idempotent-extremal", idempotent_group},
        {"cone", cone_group},
        {"classical", classical_group},
        {"oracles", oracle_group},
    };
    return table;
}

} // namespace

const std::vector<std::string> & theorem_ids()
{
    static const std::vector<std::string> ids{
        "po-class", "pdg-properties", "pdg-extremal", "idempotent-extremal", "cone", "classical", "oracles"};
    return ids;
}

std::string canonical_theorem_id(const std::string & selector)
{
    static const std::map<std::string, std::string> aliases{
        {"thm-2.2", "po-class"},
        {"thm-3.3", "pdg-properties"},
        {"thm-3.7", "pdg-extremal"},
        {"thm-idm", "idempotent-extremal"},
        {"thm-fun", "cone"},
        {"r33", "classical"},
    };
    if (selector == "all" || groups().contains(selector))
        return selector;
    if (auto it = aliases.find(selector); it != aliases.end())
        return it->second;
    throw Error(Errc::UnknownTheoremId, "'" + selector + "'");
}

bool run_suite(const std::string & selector, const SuiteOptions & options, const std::function<void(const ClaimResult &)> & emit)
{
    auto id = canonical_theorem_id(selector);
    bool all_pass = true;
    for (const auto & name : theorem_ids()) {
        if (id != "all" && id != name)
            continue;
        Runner run(name, emit);
        groups().at(name)(options, run);
        all_pass = all_pass && run.all_pass();
    }
    return all_pass;
}

nlohmann::json to_json(const ClaimResult & r)
{
    nlohmann::json doc{{"theorem", r.theorem}, {"claim", r.claim}, {"pass", r.pass}, {"elapsed_ms", r.elapsed_ms}};
    if (! r.detail.is_null())
        doc["detail"] = r.detail;
    return doc;
}

} // namespace poramsey::cli
