#include "poramsey/cone_graphs.hpp"

#include "support/errors.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace poramsey;

TEST(Cone, SpecAndWindowValidation)
{
    EXPECT_EQ(code_of([] { ConeSpec(1); }), Errc::InvalidArgument);
    EXPECT_EQ(code_of([] { Window(3, 2); }), Errc::InvalidArgument);
    EXPECT_EQ(Window(-2, 2).size(), 5U);
    EXPECT_TRUE(ConeSpec(3).contains(0));
    EXPECT_TRUE(ConeSpec(3).contains(9));
    EXPECT_FALSE(ConeSpec(3).contains(-3));
}

TEST(Cone, SemiconeAxioms)
{
    std::vector<std::int64_t> sample{0, 2, 4, 6};
    auto r = semicone_axioms(sample, positive_multiples(2));
    EXPECT_TRUE(r.intersect_ok && r.add_closed && r.mul_closed);
    EXPECT_EQ(r.cone_witness, 1);
    EXPECT_EQ(to_json(r).dump(), R"({"add_closed":true,"cone_witness":1,"intersect_ok":true,"mul_closed":true})");

    std::vector<std::int64_t> pair{3, 6};
    auto three = semicone_axioms(pair, positive_multiples(3));
    EXPECT_TRUE(three.add_closed && three.mul_closed);

    auto pretend = [](std::int64_t x) { return x == -2 || (x >= 0 && x % 2 == 0); };
    std::vector<std::int64_t> with_neg{0, 2, -2};
    auto bad = semicone_axioms(with_neg, pretend);
    EXPECT_FALSE(bad.intersect_ok);
    EXPECT_EQ(bad.intersect_violation, 2);

    // All of Z is closed but fails the intersection axiom and has no witness.
    auto everything = semicone_axioms(sample, [](std::int64_t) { return true; });
    EXPECT_FALSE(everything.intersect_ok);
    EXPECT_FALSE(everything.cone_witness);
    EXPECT_TRUE(to_json(everything)["cone_witness"].is_null());

    // Odd numbers are not closed under addition.
    std::vector<std::int64_t> odd{1, 3};
    auto odd_report = semicone_axioms(odd, [](std::int64_t x) { return x == 0 || x % 2 == 1; });
    EXPECT_FALSE(odd_report.add_closed);
    EXPECT_TRUE(odd_report.mul_closed);
}

TEST(Cone, WindowOneToTwelveIsThreeFourCliques)
{
    auto g = cone_graph(ConeSpec(3), Window(1, 12));
    auto comps = connected_components(g);
    ASSERT_EQ(comps.size(), 3U);
    for (const auto & c : comps) {
        EXPECT_EQ(c.size(), 4U);
        EXPECT_TRUE(is_clique(g, c));
    }
    std::vector<std::string> labels;
    for (auto v : comps[0])
        labels.push_back(g.label(v));
    EXPECT_EQ(labels, (std::vector<std::string>{"1", "4", "7", "10"}));

    auto small = cone_graph(ConeSpec(2), Window(0, 3));
    EXPECT_EQ(small.edges(), (std::vector<Edge>{{0, 2}, {1, 3}}));
    EXPECT_EQ(cone_graph(ConeSpec(5), Window(0, 3)).edge_count(), 0U);
}

TEST(Cone, EdgeIsCongruenceAndDifferenceInCone)
{
    for (std::int64_t k = 2; k <= 10; ++k) {
        ConeSpec spec(k);
        Window w(-37, 62);
        auto og = cone_family(spec, w);
        for (Vertex a = 0; a < w.size(); ++a)
            for (Vertex b = 0; b < w.size(); ++b) {
                if (a == b)
                    continue;
                auto x = w.value(a), y = w.value(b);
                bool congruent = ((x - y) % k + k) % k == 0;
                EXPECT_EQ(spec.contains(std::llabs(x - y)), congruent);
                EXPECT_EQ(og.graph.adjacent(a, b), congruent);
                EXPECT_EQ(og.poset.leq(a, b), spec.contains(y - x));
            }
    }
}

TEST(Cone, DisjointCliquesAndIndependenceCountsResidues)
{
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 60; ++trial) {
        std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 6);
        std::int64_t lo = static_cast<std::int64_t>(rng() % 40) - 20;
        std::int64_t hi = lo + static_cast<std::int64_t>(rng() % 14);
        auto g = cone_graph(ConeSpec(k), Window(lo, hi));
        auto comps = connected_components(g);
        EXPECT_LE(comps.size(), static_cast<std::size_t>(k));
        for (const auto & c : comps)
            EXPECT_TRUE(is_clique(g, c));
        EXPECT_EQ(oracle::independence_number(g), std::min<std::size_t>(comps.size(), g.size()));
    }
}

TEST(Cone, TranslationInvariance)
{
    for (std::int64_t k = 2; k <= 5; ++k)
        for (std::int64_t shift : {-17, 1, 100}) {
            auto a = cone_graph(ConeSpec(k), Window(0, 20));
            auto b = cone_graph(ConeSpec(k), Window(shift, shift + 20));
            EXPECT_EQ(a.edges(), b.edges());
        }
}

TEST(Cone, ClosedForm)
{
    ConeSpec three(3);
    EXPECT_EQ(cone_ramsey(three, {4, 4}), 10U);
    EXPECT_EQ(cone_ramsey(three, {4, 10}), 10U);
    EXPECT_EQ(cone_ramsey(three, {5, 3}), 9U);
    EXPECT_EQ(cone_ramsey(three, {3, 5}), 7U);
    EXPECT_EQ(cone_ramsey(ConeSpec(2), {3, 5}), 5U);
}

TEST(Cone, SymmetryAndAsymmetryOfClosedForm)
{
    for (std::int64_t k = 2; k <= 10; ++k) {
        ConeSpec spec(k);
        const auto lim = static_cast<std::size_t>(k) + 1;
        for (std::size_t n = 1; n <= 12; ++n)
            for (std::size_t m = 1; m <= 12; ++m) {
                auto forward = cone_ramsey(spec, {n, m}), backward = cone_ramsey(spec, {m, n});
                if (n <= lim && m <= lim)
                    EXPECT_EQ(forward, backward);
                if (n != m && std::max(n, m) > lim && std::min(n, m) >= 2)
                    EXPECT_NE(forward, backward) << k << " " << n << " " << m;
            }
    }
    // With one target equal to 1 both orders give 1; no asymmetry there.
    EXPECT_EQ(cone_ramsey(ConeSpec(2), {1, 7}), cone_ramsey(ConeSpec(2), {7, 1}));
}

TEST(Cone, VerifyExamples)
{
    auto r = verify_cone(ConeSpec(3), {3, 3});
    EXPECT_TRUE(r.all_pass);
    EXPECT_EQ(r.formula, 5U);
    EXPECT_EQ(r.exhaustive, 5U);
    EXPECT_GT(r.raw_subsets, 0U);

    auto parity = verify_cone(ConeSpec(2), {3, 5});
    EXPECT_TRUE(parity.all_pass);
    EXPECT_EQ(parity.formula, 5U);

    auto four = verify_cone(ConeSpec(3), {2, 4});
    EXPECT_TRUE(four.all_pass);
    EXPECT_EQ(four.exhaustive, 4U);

    auto ex = cone_extremal(ConeSpec(3), {3, 3});
    EXPECT_EQ(ex, (std::vector<std::vector<std::int64_t>>{{4, 7}, {5, 8}}));

    ConeVerificationOptions tight;
    tight.max_order = 8;
    EXPECT_EQ(code_of([&] { verify_cone(ConeSpec(3), {5, 3}, tight); }), Errc::CapExceeded);
}

TEST(Cone, VerifyGrid)
{
    for (std::int64_t k = 2; k <= 4; ++k)
        for (std::size_t n = 1; n <= 5; ++n)
            for (std::size_t m = 1; m <= 5; ++m) {
                auto r = verify_cone(ConeSpec(k), {n, m});
                EXPECT_TRUE(r.all_pass) << to_json(r).dump();
            }
}

TEST(Cone, ResidueOracleAgreesWithSubsetOracleOnSmallWindows)
{
    // Brute force over every r-subset of [1, 12] for k = 3 and small targets.
    auto g = cone_graph(ConeSpec(3), Window(1, 12));
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t m = 2; m <= 4; ++m) {
            auto r = cone_ramsey(ConeSpec(3), {n, m});
            EXPECT_TRUE(oracle::every_subset_hits(g, r, n, m));
            EXPECT_FALSE(oracle::every_subset_hits(g, r - 1, n, m));
        }
}
