#include "poramsey/graph.hpp"
#include "poramsey/poset_enum.hpp"
#include "poramsey/ramsey.hpp"
#include "poramsey/ring_graphs.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace poramsey;

namespace {

Graph random_graph(std::size_t size, double density, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(density);
    Graph g(size);
    for (Vertex a = 0; a < size; ++a)
        for (Vertex b = a + 1; b < size; ++b)
            if (coin(rng))
                g.add_edge(a, b);
    return g;
}

Poset random_poset(std::size_t size, double density, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(density);
    std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
    for (Vertex a = 0; a < size; ++a) {
        leq[a][a] = true;
        for (Vertex b = a + 1; b < size; ++b)
            leq[a][b] = coin(rng);
    }
    for (Vertex k = 0; k < size; ++k)
        for (Vertex a = 0; a < k; ++a)
            if (leq[a][k])
                for (Vertex b = k + 1; b < size; ++b)
                    if (leq[k][b])
                        leq[a][b] = true;
    return validate_poset(leq);
}

} // namespace

static void BM_CliqueNumber(benchmark::State & state)
{
    auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(clique_number(g, {g.size()}));
}
BENCHMARK(BM_CliqueNumber)->Arg(32)->Arg(64)->Arg(128);

static void BM_CliqueNumberPdg(benchmark::State & state)
{
    auto g = pdg_graph(PdgSpec(first_primes(static_cast<std::size_t>(state.range(0)))));
    for (auto _ : state)
        benchmark::DoNotOptimize(clique_number(g, {g.size()}));
}
BENCHMARK(BM_CliqueNumberPdg)->Arg(6)->Arg(8);

static void BM_CountPosets(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(count_labeled_posets(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CountPosets)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_ExtractWitness(benchmark::State & state)
{
    auto size = static_cast<std::size_t>(state.range(0));
    auto p = random_poset(size, 0.1, 11);
    auto subset = all_vertices(size);
    RamseyQuery q(8, 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(extract_witness(p, subset, q));
}
BENCHMARK(BM_ExtractWitness)->Arg(64)->Arg(256)->Arg(1024);

static void BM_VerifyPo(benchmark::State & state)
{
    EnumerationOptions o;
    o.workers = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_po_class({3, 3}, o));
}
BENCHMARK(BM_VerifyPo)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
