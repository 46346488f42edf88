#include <benchmark/benchmark.h>

#include "contractlab/generators.hpp"
#include "contractlab/lp.hpp"
#include "contractlab/multi_agent.hpp"
#include "contractlab/oracles.hpp"
#include "contractlab/ptas.hpp"
#include "contractlab/single_agent.hpp"

using namespace contractlab;

static void BM_bruteforce_optimum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GeneratedInstance gen = gen_gnp(n, 0.5, 1, make_rational(1, 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bruteforce_optimum(gen.instance));
  }
}
BENCHMARK(BM_bruteforce_optimum)->Arg(14)->Arg(18)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_demand_mincut(benchmark::State& state) {
  const GeneratedInstance gen = gen_gnp(12, 0.5, 2, make_rational(1, 4));
  std::vector<Rational> costs(12, make_rational(1, 9));
  const Rational t = make_rational(1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(demand_mincut(gen.instance.graph, t, costs));
  }
}
BENCHMARK(BM_demand_mincut);

static void BM_breakpoints(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GeneratedInstance gen = gen_gnp(n, 0.6, 3, make_rational(1, 4));
  const Valuation v = Valuation::graph_supermodular(gen.instance.graph);
  const std::vector<Rational> costs(n, make_rational(1, 32));
  for (auto _ : state) {
    OracleStats stats;
    AgentOracle oracle = make_bruteforce_agent_oracle(v, costs, stats);
    benchmark::DoNotOptimize(breakpoints(v, costs, oracle));
  }
}
BENCHMARK(BM_breakpoints)->Arg(8)->Arg(10)->Arg(12);

static void BM_bruteforce_breakpoints(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GeneratedInstance gen = gen_gnp(n, 0.6, 3, make_rational(1, 4));
  const Valuation v = Valuation::graph_supermodular(gen.instance.graph);
  const std::vector<Rational> costs(n, make_rational(1, 32));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bruteforce_breakpoints(v, costs));
  }
}
BENCHMARK(BM_bruteforce_breakpoints)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_surrogate_lp(benchmark::State& state) {
  const GeneratedInstance gen = gen_planted(100, 40, 0.05, 4, make_rational(1, 2));
  NodeSet h(100);
  DegreeEstimates est;
  est.d_hat.assign(100, 0.0);
  for (int v = 0; v < 40; ++v) {
    h.add(v);
    est.d_hat[v] = 39.0;
  }
  const LpModel model = build_lp(gen.instance, h, 780, est, 0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_lp(model));
  }
}
BENCHMARK(BM_surrogate_lp);

static void BM_ptas_repetition(benchmark::State& state) {
  const GeneratedInstance gen = gen_planted(100, 30, 0.05, 5, make_rational(1, 2));
  PtasConfig cfg;
  cfg.epsilon = 0.2;
  cfg.reps = 1;
  cfg.rounding_draws = 20;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptas_solve(gen.instance, cfg));
  }
}
BENCHMARK(BM_ptas_repetition)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
