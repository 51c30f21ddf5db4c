#include "poramsey/poset_enum.hpp"
#include "poramsey/ramsey.hpp"

#include "support/errors.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace poramsey;

namespace {

EnumerationOptions single_worker()
{
    EnumerationOptions o;
    o.workers = 1;
    return o;
}

} // namespace

TEST(Ramsey, QueryValidation)
{
    EXPECT_EQ(code_of([] { RamseyQuery(0, 3); }), Errc::InvalidArgument);
    EXPECT_EQ(code_of([] { RamseyQuery(3, 0); }), Errc::InvalidArgument);
    EXPECT_EQ(RamseyQuery(2, 5).swapped(), RamseyQuery(5, 2));
}

TEST(Ramsey, ClosedForm)
{
    EXPECT_EQ(ramsey_po({3, 3}), 5U);
    EXPECT_EQ(ramsey_po({1, 9}), 1U);
    EXPECT_EQ(ramsey_po({4, 5}), 13U);
    EXPECT_EQ(ramsey_po({2, 7}), 7U);
}

TEST(Ramsey, WitnessOnChainAndAntichain)
{
    auto chain = chain_poset(5);
    auto all = all_vertices(5);
    auto w = extract_witness(chain, all, {3, 3});
    EXPECT_EQ(w.kind, RamseyWitness::Kind::Clique);
    EXPECT_EQ(w.vertices, (std::vector<Vertex>{0, 1, 2}));

    auto anti = antichain_poset(5);
    w = extract_witness(anti, all, {3, 3});
    EXPECT_EQ(w.kind, RamseyWitness::Kind::Independent);
    EXPECT_EQ(w.vertices, (std::vector<Vertex>{0, 1, 2}));

    std::vector<Vertex> four{0, 1, 2, 3};
    EXPECT_EQ(code_of([&] { extract_witness(anti, four, {3, 3}); }), Errc::SubsetTooSmall);
}

TEST(Ramsey, CliqueBranchIsTriedFirst)
{
    // Two-level order: 0,1 below 2,3,4. Both a 2-chain and a 3-antichain exist.
    auto p = poset_from_relation(5, [](Vertex a, Vertex b) { return a < 2 && b >= 2; });
    auto w = extract_witness(p, all_vertices(5), {2, 3});
    EXPECT_EQ(w.kind, RamseyWitness::Kind::Clique);
    EXPECT_EQ(w.vertices, (std::vector<Vertex>{0, 2}));
    EXPECT_TRUE(witness_is_valid(p, w, {2, 3}));

    w = extract_witness(p, all_vertices(5), {3, 3});
    EXPECT_EQ(w.kind, RamseyWitness::Kind::Independent);
    EXPECT_EQ(w.vertices, (std::vector<Vertex>{2, 3, 4}));
}

TEST(Ramsey, WitnessValidatorRejectsBadWitnesses)
{
    auto p = chain_poset(4);
    EXPECT_FALSE(witness_is_valid(p, {RamseyWitness::Kind::Clique, {0, 1}}, {3, 2}));
    EXPECT_FALSE(witness_is_valid(p, {RamseyWitness::Kind::Independent, {0, 1}}, {3, 2}));
    EXPECT_FALSE(witness_is_valid(p, {RamseyWitness::Kind::Clique, {0, 0, 1}}, {3, 2}));
    EXPECT_FALSE(witness_is_valid(p, {RamseyWitness::Kind::Clique, {0, 1, 9}}, {3, 2}));
    EXPECT_TRUE(witness_is_valid(p, {RamseyWitness::Kind::Clique, {3, 0, 1}}, {3, 2}));
}

TEST(Ramsey, WitnessSoundOnRandomSubsets)
{
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 500; ++trial) {
        auto size = 1 + rng() % 20;
        auto p = gen::random_poset(rng, size, static_cast<double>(rng() % 100) / 100.0);
        auto order = orient(p);
        std::vector<Vertex> subset = all_vertices(size);
        std::shuffle(subset.begin(), subset.end(), rng);
        subset.resize(1 + rng() % size);
        std::size_t n = 1 + rng() % 5, m = 1 + rng() % 5;
        RamseyQuery q(n, m);
        if (ramsey_po(q) > subset.size())
            continue;
        auto w = extract_witness(order, subset, q);
        EXPECT_TRUE(witness_is_valid(p, w, q));
        EXPECT_TRUE(witness_is_valid(comparability_graph(p), w, q));
        for (auto v : w.vertices)
            EXPECT_NE(std::find(subset.begin(), subset.end(), v), subset.end());
    }
}

TEST(Ramsey, ExtremalPoGraph)
{
    auto ex = extremal_po_graph({3, 4});
    EXPECT_EQ(ex.graph.size(), 6U);
    EXPECT_EQ(ex.partition.blocks, (std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}}));
    EXPECT_EQ(ex.graph.label(4), "A2_2");
    EXPECT_EQ(oracle::clique_number(ex.graph), 2U);
    EXPECT_EQ(oracle::independence_number(ex.graph), 3U);
    EXPECT_EQ(ex.graph, comparability_graph(ex.poset, ex.graph.labels()));
    EXPECT_EQ(code_of([] { extremal_po_graph({1, 4}); }), Errc::DegenerateQuery);
}

TEST(Ramsey, ClosedFormIsTightOnComparabilityGraphsBruteForce)
{
    // Every poset of order r - 1 = 4 is scanned by the oracle for (3,3): some poset must fail.
    bool some_poset_avoids = false;
    for_each_labeled_poset(4, [&](const Poset & p) {
        auto g = comparability_graph(p);
        if (oracle::clique_number(g) < 3 && oracle::independence_number(g) < 3)
            some_poset_avoids = true;
    });
    EXPECT_TRUE(some_poset_avoids);
}

TEST(Ramsey, VerifyPoClassSmall)
{
    auto r = verify_po_class({3, 3}, single_worker());
    EXPECT_TRUE(r.all_pass);
    EXPECT_EQ(r.order, 5U);
    EXPECT_EQ(r.enumerated, 4231U);
    EXPECT_FALSE(r.counterexample);

    auto degenerate = verify_po_class({1, 4}, single_worker());
    EXPECT_TRUE(degenerate.all_pass);
    EXPECT_EQ(degenerate.enumerated, 1U);

    EnumerationOptions tight = single_worker();
    tight.max_poset_order = 4;
    EXPECT_EQ(code_of([&] { verify_po_class({3, 3}, tight); }), Errc::CapExceeded);

    auto doc = to_json(r);
    EXPECT_EQ(doc["all_pass"], true);
    EXPECT_EQ(doc["enumerated"], 4231);
    EXPECT_TRUE(doc["counterexample"].is_null());
    EXPECT_EQ(doc["query"]["n"], 3);
}

TEST(Ramsey, VerifyPoClassWorkerCountDoesNotChangeResult)
{
    EnumerationOptions many = single_worker();
    many.workers = 4;
    auto a = verify_po_class({2, 5}, single_worker());
    auto b = verify_po_class({2, 5}, many);
    EXPECT_EQ(a.enumerated, b.enumerated);
    EXPECT_EQ(a.all_pass, b.all_pass);
}

TEST(Ramsey, GeneralSearch)
{
    auto pass = general_ramsey_search({3, 3}, 6, single_worker());
    EXPECT_TRUE(pass.all_pass);
    EXPECT_EQ(pass.enumerated, 32768U);

    auto fail = general_ramsey_search({3, 3}, 5, single_worker());
    EXPECT_FALSE(fail.all_pass);
    ASSERT_TRUE(fail.counterexample);
    EXPECT_FALSE(has_clique_or_independent(*fail.counterexample, {3, 3}));
    EXPECT_EQ(oracle::clique_number(*fail.counterexample), 2U);

    EXPECT_EQ(code_of([] { general_ramsey_search({3, 3}, 7); }), Errc::CapExceeded);
}

TEST(Ramsey, GeneralSearchMatchesSubsetOracleOnSmallOrders)
{
    // R(2, m) = m and R(3, 3) = 6: the least passing order from search equals the brute-force one.
    for (std::size_t m = 2; m <= 4; ++m) {
        EXPECT_FALSE(general_ramsey_search({2, m}, m - 1, single_worker()).all_pass);
        EXPECT_TRUE(general_ramsey_search({2, m}, m, single_worker()).all_pass);
    }
    EXPECT_TRUE(oracle::every_subset_hits(complete_graph(6), 3, 3, 3));
}

TEST(Ramsey, WitnessJson)
{
    RamseyWitness w{RamseyWitness::Kind::Independent, {1, 4}};
    EXPECT_EQ(to_json(w).dump(), R"({"kind":"independent","vertices":[1,4]})");
}
