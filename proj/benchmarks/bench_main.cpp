#include "succmso/efgame.hpp"
#include "succmso/graph.hpp"
#include "succmso/mso.hpp"
#include "succmso/reduce.hpp"
#include "succmso/sgr.hpp"
#include "succmso/treedec.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

namespace {

using namespace succmso;

Digraph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Digraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Random 3-CNF with the given variable and clause counts.
CnfInstance random_cnf(std::size_t vars, std::size_t clauses, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> var(1, static_cast<int>(vars));
    std::bernoulli_distribution sign(0.5);
    CnfInstance cnf;
    cnf.vars = vars;
    for (std::size_t c = 0; c < clauses; ++c) {
        synth::Clause clause;
        while (clause.size() < std::min<std::size_t>(3, vars)) {
            const int v = var(rng);
            if (std::find(clause.begin(), clause.end(), v) == clause.end() &&
                std::find(clause.begin(), clause.end(), -v) == clause.end())
                clause.push_back(sign(rng) ? v : -v);
        }
        cnf.clauses.push_back(std::move(clause));
    }
    return cnf;
}

const GadgetQuadruple& toy() {
    static const GadgetQuadruple quad = normalize_layout(gadgets::toy_quadruple());
    return quad;
}

void BM_Compile(benchmark::State& state) {
    const auto vars = static_cast<std::size_t>(state.range(0));
    const CnfInstance cnf = random_cnf(vars, 4 * vars, 7);
    for (auto _ : state) benchmark::DoNotOptimize(compile(toy(), cnf));
    state.counters["gates"] = static_cast<double>(compile(toy(), cnf).circuit().gates().size());
}
BENCHMARK(BM_Compile)->Arg(8)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_Materialize(benchmark::State& state) {
    const auto vars = static_cast<std::size_t>(state.range(0));
    const Sgr s = compile(toy(), random_cnf(vars, 2 * vars, 11));
    for (auto _ : state) benchmark::DoNotOptimize(materialize(s, std::uint64_t{1} << 12));
    state.counters["N"] = static_cast<double>(s.n_vertices());
}
BENCHMARK(BM_Materialize)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EdgeQuery(benchmark::State& state) {
    const Sgr s = reduce_loop(random_cnf(static_cast<std::size_t>(state.range(0)), 16, 5));
    const BigInt x = 1;
    for (auto _ : state) benchmark::DoNotOptimize(edge_query(s, x, x));
}
BENCHMARK(BM_EdgeQuery)->Arg(4)->Arg(16)->Arg(64);

void BM_MsoReach(benchmark::State& state) {
    const Digraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 3);
    const auto phi = mso::forall("x", mso::forall("y", mso::reach("x", "y")));
    for (auto _ : state) benchmark::DoNotOptimize(mso::eval(g, phi));
}
BENCHMARK(BM_MsoReach)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

void BM_MsoFirstOrder(benchmark::State& state) {
    const Digraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.2, 4);
    const auto phi = mso::sentences::determinism();
    for (auto _ : state) benchmark::DoNotOptimize(mso::eval(g, phi));
}
BENCHMARK(BM_MsoFirstOrder)->Arg(16)->Arg(64);

void BM_EfEquiv(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const Digraph a = power_union(Digraph(1), 3);
    const Digraph b = power_union(Digraph(1), 4);
    for (auto _ : state) benchmark::DoNotOptimize(ef_equiv(a, b, m));
}
BENCHMARK(BM_EfEquiv)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Treewidth(benchmark::State& state) {
    const Digraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.25, 9);
    for (auto _ : state) benchmark::DoNotOptimize(treewidth_exact(g));
}
BENCHMARK(BM_Treewidth)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
