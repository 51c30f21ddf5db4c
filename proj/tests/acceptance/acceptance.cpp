// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "poramsey/cone_graphs.hpp"
#include "poramsey/planarity.hpp"
#include "poramsey/poset_enum.hpp"
#include "poramsey/ramsey.hpp"
#include "poramsey/ring_graphs.hpp"

#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace poramsey;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::ostringstream why;

    void require(bool cond, const std::string & what)
    {
        if (! cond && ok) {
            ok = false;
            why << what;
        }
    }
};

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool criterion(int id, const std::string & title, double budget_ms, const std::function<void(Check &)> & body)
{
    Check check;
    auto start = Clock::now();
    try {
        body(check);
    }
    catch (const std::exception & e) {
        check.require(false, std::string("exception: ") + e.what());
    }
    auto elapsed = ms_since(start);
    if (budget_ms > 0)
        check.require(elapsed < budget_ms, "took " + std::to_string(elapsed) + " ms, budget " + std::to_string(budget_ms) + " ms");
    std::printf("%s AC%d %s [%.0f ms]%s%s\n", check.ok ? "PASS" : "FAIL", id, title.c_str(), elapsed,
        check.ok ? "" : " : ", check.why.str().c_str());
    std::fflush(stdout);
    return check.ok;
}

std::string pair_text(std::size_t n, std::size_t m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

EnumerationOptions enumeration()
{
    EnumerationOptions o;
    o.max_poset_order = 7;
    o.max_graph_order = 6;
    return o;
}

void closed_form(Check & c)
{
    double through_five = 0;
    std::size_t queries = 0;
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t m = 1; m <= 8; ++m) {
            RamseyQuery q(n, m);
            if (ramsey_po(q) > 7)
                continue;
            c.require(ramsey_po(q) == (n - 1) * (m - 1) + 1, "closed form " + pair_text(n, m));
            auto start = Clock::now();
            auto r = verify_po_class(q, enumeration());
            if (ramsey_po(q) <= 5)
                through_five += ms_since(start);
            ++queries;
            c.require(r.all_pass && r.witnesses_valid && r.extremal_avoids_both && ! r.counterexample,
                "verification failed at " + pair_text(n, m));
            c.require(r.enumerated == count_labeled_posets(r.order), "enumeration incomplete at " + pair_text(n, m));
        }
    // 14 pairs with n, m >= 2 plus the trivial rows n = 1 or m = 1 up to 8.
    c.require(queries == 29, "expected 29 queries, ran " + std::to_string(queries));
    c.require(through_five < 1000.0, "orders through 5 took " + std::to_string(through_five) + " ms");
}

void enumerator_counts(Check & c)
{
    const std::uint64_t expected[] = {1, 3, 19, 219, 4231, 130023};
    for (std::size_t order = 1; order <= 6; ++order) {
        auto count = count_labeled_posets(order);
        c.require(count == expected[order - 1], "order " + std::to_string(order) + " gave " + std::to_string(count));
        std::uint64_t visited = 0;
        if (order <= 5) {
            for_each_labeled_poset(order, [&](const Poset &) { ++visited; });
            c.require(visited == count, "visitor disagrees at order " + std::to_string(order));
        }
    }
    c.require(oracle::count_posets_by_relations(4) == 219, "relation brute force at order 4");
}

void pdg_sweep(Check & c)
{
    const std::size_t girth_expected[] = {0, 6, 3, 3, 3}; // 0 marks infinite
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto tag = " at n=" + std::to_string(n);
        auto spec = PdgSpec(first_primes(n));
        auto g = pdg_graph(spec);
        auto e = pdg_expected_properties(n);
        SearchLimits limits{g.size()};

        c.require(g.size() == (std::size_t{1} << n) - 2 && e.vertex_count == g.size(), "vertex count" + tag);
        c.require(is_connected(g) == (n >= 3) && e.connected == (n >= 3), "connectivity" + tag);
        auto d = diameter(g);
        c.require(d == e.diameter, "diameter vs expected" + tag);
        if (n >= 3)
            c.require(d.is_finite() && d.value() == 3, "diameter 3" + tag);
        else
            c.require(d.is_infinite(), "diameter infinite" + tag);
        auto dom = domination_number(g, limits);
        c.require(dom == 2 && e.domination == 2, "domination" + tag);
        auto gi = girth(g);
        c.require(gi == e.girth, "girth vs expected" + tag);
        if (girth_expected[n - 2] == 0)
            c.require(gi.is_infinite(), "girth infinite" + tag);
        else
            c.require(gi.is_finite() && gi.value() == girth_expected[n - 2], "girth value" + tag);

        for (Vertex v = 0; v < g.size(); ++v) {
            auto k = static_cast<std::size_t>(std::popcount(pdg_mask(v)));
            auto want = (std::size_t{1} << k) + (std::size_t{1} << (n - k)) - 4;
            c.require(degree(g, v) == want && e.degree_by_size[k - 1] == want, "degree of " + g.label(v) + tag);
        }

        std::vector<std::vector<Vertex>> classes(n - 1);
        for (Vertex v = 0; v < g.size(); ++v)
            classes[std::popcount(pdg_mask(v)) - 1].push_back(v);
        for (const auto & cls : classes)
            c.require(! cls.empty() && is_independent_set(g, cls), "size class not independent" + tag);
        c.require(e.parts == n - 1 && clique_number(g, limits) == n - 1, "partite count" + tag);

        auto p = is_planar(g);
        c.require(p.planar == (n <= 4), "planarity" + tag);
        c.require(p.planar == e.planar, "planarity vs expected" + tag);
        if (p.planar)
            c.require(validate_embedding(g, p.embedding), "embedding" + tag);
        else
            c.require(p.certificate && validate_certificate(g, *p.certificate), "library certificate" + tag);

        if (n == 5) {
            auto k33 = pdg_k33_certificate(n);
            std::vector<std::string> left, right;
            std::array<Vertex, 3> lv{}, rv{};
            for (std::size_t i = 0; i < 3; ++i) {
                lv[i] = pdg_vertex(k33.left[i]);
                rv[i] = pdg_vertex(k33.right[i]);
                left.push_back(g.label(lv[i]));
                right.push_back(g.label(rv[i]));
            }
            c.require(left == std::vector<std::string>{"m1*m2*m3", "m1*m2*m4", "m1*m2*m5"}
                    && right == std::vector<std::string>{"m1", "m2", "m1*m2"},
                "K3,3 sides differ from m1m2m3, m1m2m4, m1m2m5 | m1, m2, m1m2");
            c.require(validate_certificate(g, k33_certificate(g, lv, rv)), "K3,3 certificate rejected");
        }
    }
}

/// Complete (n-1)-partite with the given blocks as parts, omega and alpha by
/// exact search, and a valid witness after adding any other ambient vertex.
void check_sharp(Check & c, const std::string & tag, const OrderedGraph & ambient, const std::vector<std::vector<Vertex>> & blocks,
    const RamseyQuery & q)
{
    std::vector<Vertex> base;
    for (const auto & b : blocks)
        base.insert(base.end(), b.begin(), b.end());
    c.require(base.size() == ramsey_po(q) - 1, "block total" + tag);
    auto h = induced_subgraph(ambient.graph, base);

    auto parts = complete_multipartite_parts(h);
    const auto * found = std::get_if<std::vector<std::vector<Vertex>>>(&parts);
    c.require(found != nullptr, "not complete multipartite" + tag);
    if (found) {
        std::set<std::vector<Vertex>> got(found->begin(), found->end()), want;
        std::size_t offset = 0;
        for (const auto & b : blocks) {
            std::vector<Vertex> local(b.size());
            std::iota(local.begin(), local.end(), offset);
            offset += b.size();
            want.insert(local);
        }
        c.require(got == want && found->size() == q.n() - 1, "parts are not the blocks" + tag);
    }
    c.require(clique_number(h) == q.n() - 1, "omega" + tag);
    c.require(independence_number(h) == q.m() - 1, "alpha" + tag);
    c.require(oracle::clique_number(h) == q.n() - 1 || h.size() > 20, "omega oracle" + tag);

    auto order = orient(ambient.poset);
    std::vector<bool> in_base(ambient.graph.size(), false);
    for (auto v : base)
        in_base[v] = true;
    for (Vertex extra = 0; extra < ambient.graph.size(); ++extra) {
        if (in_base[extra])
            continue;
        auto subset = base;
        subset.push_back(extra);
        auto w = extract_witness(order, subset, q);
        c.require(witness_is_valid(ambient.poset, w, q) && witness_is_valid(ambient.graph, w, q),
            "extra vertex " + ambient.graph.label(extra) + tag);
    }
}

void sharpness(Check & c)
{
    std::size_t pairs = 0;
    for (std::size_t n = 2; n <= 13; ++n)
        for (std::size_t m = 2; m <= 13; ++m) {
            if ((n - 1) * (m - 1) > 12)
                continue;
            ++pairs;
            RamseyQuery q(n, m);
            auto pdg = pdg_extremal(q);
            std::vector<std::vector<Vertex>> blocks;
            for (const auto & b : pdg.blocks) {
                blocks.emplace_back();
                for (auto mask : b)
                    blocks.back().push_back(pdg_vertex(mask));
            }
            check_sharp(c, " (pdg " + pair_text(n, m) + ")", pdg_family(pdg.spec), blocks, q);

            auto idm = idempotent_extremal(q);
            blocks.clear();
            for (const auto & b : idm.blocks)
                blocks.emplace_back(b.begin(), b.end());
            check_sharp(c, " (idempotent " + pair_text(n, m) + ")", idempotent_graph(idm.width), blocks, q);
        }
    c.require(pairs == 35, "expected 35 pairs, saw " + std::to_string(pairs));
}

void class_gap(Check & c)
{
    auto six = general_ramsey_search({3, 3}, 6, enumeration());
    c.require(six.all_pass && six.enumerated == 32768, "order 6 search");
    auto five = general_ramsey_search({3, 3}, 5, enumeration());
    c.require(! five.all_pass && five.counterexample, "order 5 search found no counterexample");
    if (five.counterexample)
        c.require(oracle::clique_number(*five.counterexample) < 3 && oracle::independence_number(*five.counterexample) < 3,
            "counterexample has a target");
    auto po = verify_po_class({3, 3}, enumeration());
    c.require(po.all_pass && po.order == 5 && po.enumerated == 4231, "poset class at order 5");
}

void cones(Check & c)
{
    for (std::int64_t k = 2; k <= 4; ++k)
        for (std::size_t n = 1; n <= 5; ++n)
            for (std::size_t m = 1; m <= 5; ++m) {
                ConeSpec spec(k);
                auto r = verify_cone(spec, {n, m});
                c.require(r.all_pass && r.exhaustive == cone_ramsey(spec, {n, m}) && r.formula == r.exhaustive,
                    "k=" + std::to_string(k) + " " + pair_text(n, m));
            }
    ConeSpec three(3);
    c.require(cone_ramsey(three, {5, 3}) == 9 && cone_ramsey(three, {3, 5}) == 7, "asymmetric pair");
    c.require(verify_cone(three, {5, 3}).exhaustive == 9 && verify_cone(three, {3, 5}).exhaustive == 7,
        "asymmetric pair by search");

    auto g = cone_graph(three, Window(1, 12));
    auto comps = connected_components(g);
    c.require(comps.size() == 3, "window component count");
    for (const auto & comp : comps)
        c.require(comp.size() == 4 && is_clique(g, comp), "window component is not a 4-clique");
}

void oracles(Check & c)
{
    for (std::uint64_t n = 2; n <= 200; ++n)
        for (std::uint64_t a = 0; a < n; ++a)
            for (std::uint64_t b = 0; b < n; ++b)
                if (divides_zn({n, a}, {n, b}) != oracle::multiplier_divides(n, a, b)) {
                    c.require(false, "Z_" + std::to_string(n) + ": " + std::to_string(a) + " | " + std::to_string(b));
                    return;
                }

    for (std::size_t n = 2; n <= 6; ++n) {
        PdgSpec spec(first_primes(n));
        auto g = pdg_graph(spec);
        for (Vertex a = 0; a < g.size(); ++a)
            for (Vertex b = a + 1; b < g.size(); ++b) {
                auto x = *pdg_value(spec, pdg_mask(a)), y = *pdg_value(spec, pdg_mask(b));
                auto ma = pdg_mask(a), mb = pdg_mask(b);
                bool contained = (ma & mb) == ma || (ma & mb) == mb;
                bool divides = y % x == 0 || x % y == 0;
                c.require(g.adjacent(a, b) == contained && contained == divides, "pdg pair " + g.label(a) + ", " + g.label(b));
            }
    }

    std::vector<std::pair<std::string, OrderedGraph>> families;
    for (std::size_t n = 2; n <= 6; ++n)
        families.emplace_back("pdg " + std::to_string(n), pdg_family(PdgSpec(first_primes(n))));
    families.emplace_back("pdg 4,9,25,49", pdg_family(PdgSpec({4, 9, 25, 49})));
    for (std::uint64_t n = 4; n <= 120; ++n) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            prime = prime && n % d != 0;
        if (prime)
            continue;
        families.emplace_back("div Z_" + std::to_string(n), divisibility_graph_zn(n));
        families.emplace_back("ideal Z_" + std::to_string(n), inclusion_ideal_graph_zn(n));
    }
    for (std::size_t w = 1; w <= 8; ++w)
        families.emplace_back("idempotent " + std::to_string(w), idempotent_graph(w));
    for (std::size_t dim = 2; dim <= 3; ++dim)
        families.emplace_back("matrix dim " + std::to_string(dim), matrix_graph(matrix_extremal({3, 4}, dim).matrices));
    for (std::int64_t k = 2; k <= 5; ++k)
        families.emplace_back("cone " + std::to_string(k), cone_family(ConeSpec(k), Window(-7, 25)));
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t m = 2; m <= 4; ++m) {
            auto ex = extremal_po_graph({n, m});
            families.emplace_back("extremal " + pair_text(n, m), OrderedGraph{ex.poset, ex.graph});
        }
    for (auto & [name, og] : families) {
        auto checked = validate_poset(og.poset.relation());
        c.require(comparability_graph(checked, og.graph.labels()) == og.graph, "generator " + name);
    }
}

void fuzz(Check & c)
{
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 10000; ++trial) {
        std::size_t size = 1 + rng() % 40;
        auto p = gen::random_poset(rng, size, static_cast<double>(rng() % 1000) / 1000.0);
        std::size_t n = 1, m = 1;
        do {
            n = 1 + rng() % size;
            m = 1 + rng() % size;
        } while ((n - 1) * (m - 1) + 1 > size);
        RamseyQuery q(n, m);
        auto w = extract_witness(p, all_vertices(size), q);

        bool ok = w.vertices.size() == (w.kind == RamseyWitness::Kind::Clique ? n : m);
        std::set<Vertex> distinct(w.vertices.begin(), w.vertices.end());
        ok = ok && distinct.size() == w.vertices.size();
        for (auto a : w.vertices)
            for (auto b : w.vertices)
                if (ok && a != b) {
                    ok = a < size && b < size;
                    bool comparable = p.leq(a, b) || p.leq(b, a);
                    ok = ok && comparable == (w.kind == RamseyWitness::Kind::Clique);
                }
        c.require(ok, "trial " + std::to_string(trial) + " size " + std::to_string(size) + " query " + pair_text(n, m));
    }
}

} // namespace

int main()
{
    bool all = true;
    all &= criterion(1, "closed form over every poset at order (n-1)(m-1)+1 <= 7", 60000, closed_form);
    all &= criterion(2, "labeled poset counts for orders 1..6", 0, enumerator_counts);
    all &= criterion(3, "perfect divisor graph invariants for n in [2,6]", 10000, pdg_sweep);
    all &= criterion(4, "extremal pdg and idempotent blocks are sharp for (n-1)(m-1) <= 12", 30000, sharpness);
    all &= criterion(5, "classical R(3,3)=6 against the poset class at 5", 5000, class_gap);
    all &= criterion(6, "cone closed form against residue-pattern search, window [1,12]", 10000, cones);
    all &= criterion(7, "oracle equivalences and generator consistency", 30000, oracles);
    all &= criterion(8, "witness soundness on 10000 random posets of size <= 40", 60000, fuzz);
    std::printf("%s\n", all ? "ALL PASS" : "SOME FAILED");
    return all ? 0 : 1;
}
