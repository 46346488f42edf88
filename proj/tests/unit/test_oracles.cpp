#include <doctest.h>

#include "contractlab/oracles.hpp"
#include "contractlab/rng.hpp"

using namespace contractlab;

namespace {
const Graph& triangle() {
  static const Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
  return g;
}

PriceVector uniform_prices(int n, const Rational& p) {
  return PriceVector(n, Price::finite(p));
}
}  // namespace

TEST_CASE("demand with infinite prices is empty") {
  const Valuation v = Valuation::graph_supermodular(triangle());
  const PriceVector inf(3, Price::inf());
  CHECK(demand_bruteforce(v, inf) == kEmptySet);
}

TEST_CASE("demand at zero prices takes everything when reward is strict") {
  const Valuation v = Valuation::graph_supermodular(triangle());
  CHECK(demand_bruteforce(v, uniform_prices(3, Rational(0))) == full_set(3));

  const Valuation add =
      Valuation::additive({make_rational(1, 4), make_rational(1, 4), make_rational(1, 4)});
  CHECK(demand_bruteforce(add, uniform_prices(3, Rational(0))) == full_set(3));
}

TEST_CASE("triangle demand at price 1/6") {
  const Valuation v = Valuation::graph_supermodular(triangle());
  const ActionSet s = demand_bruteforce(v, uniform_prices(3, make_rational(1, 6)));
  CHECK(s == full_set(3));  // utility 1 - 1/2, enumerated by hand over all 8 subsets
}

TEST_CASE("agent oracle tie favors the larger reward") {
  // single action worth 1 at cost 1/2: at t = 1/2 the agent is indifferent
  const Valuation v = Valuation::explicit_table(1, {Rational(0), Rational(1)});
  const std::vector<Rational> costs{make_rational(1, 2)};
  OracleStats stats;
  AgentOracle oracle = make_bruteforce_agent_oracle(v, costs, stats);
  CHECK(oracle.at(make_rational(1, 2)) == 0b1);
  CHECK(oracle.at(Rational(0)) == kEmptySet);
  CHECK(stats.demand_calls == 1);  // t = 0 answered without a demand query
}

TEST_CASE("agent oracle vs direct enumeration with tie-breaking") {
  const Valuation v =
      Valuation::additive({make_rational(1, 2), make_rational(1, 4), make_rational(1, 4)});
  const std::vector<Rational> costs{make_rational(1, 8), make_rational(1, 8), make_rational(1, 8)};
  OracleStats stats;
  AgentOracle oracle = make_bruteforce_agent_oracle(v, costs, stats);
  const Rational t = make_rational(1, 2);
  const ActionSet got = oracle.at(t);

  ActionSet best = 0;
  Rational best_u(0), best_f(0);
  for (ActionSet s = 0; s <= full_set(3); ++s) {
    Rational u = v.value(s) * t;
    for (int i = 0; i < 3; ++i)
      if (set_contains(s, i)) u -= costs[i];
    const Rational f = v.value(s);
    if (u > best_u || (u == best_u && f > best_f)) {
      best = s;
      best_u = u;
      best_f = f;
    }
  }
  CHECK(got == best);
}

TEST_CASE("min-cut demand oracle on hand-checked cases") {
  // single edge, profit below every cost
  const Graph matching(4, {{0, 1}, {2, 3}});
  std::vector<Rational> costs{make_rational(1, 3), make_rational(1, 3), make_rational(1, 3),
                              make_rational(1, 3)};
  // t/E_max = t/6 < 1/3 for t = 1
  CHECK(demand_mincut(matching, Rational(1), costs) == kEmptySet);

  // rewards dominate: t = E_max (total cost + 1)
  const Rational big = Rational(triangle().e_max()) * (Rational(1) + 1);
  std::vector<Rational> tri_costs{make_rational(1, 9), make_rational(1, 9), make_rational(1, 9)};
  CHECK(demand_mincut(triangle(), big, tri_costs) == full_set(3));

  // cross-check against enumeration at a tie-heavy contract
  const Rational t = make_rational(1, 2);
  const Valuation v = Valuation::graph_supermodular(triangle());
  CHECK(demand_mincut(triangle(), t, tri_costs) ==
        demand_bruteforce(v, prices_for_contract(tri_costs, t)));
}

TEST_CASE("min-cut matches enumeration on random instances") {
  for (int i = 0; i < 40; ++i) {
    Rng rng(derive_seed(0xABC, i));
    const int n = 3 + static_cast<int>(rng.uniform_u64(8));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int w = u + 1; w < n; ++w)
        if (rng.bernoulli(0.5)) edges.emplace_back(u, w);
    const Graph g(n, std::move(edges));
    std::vector<Rational> costs;
    for (int v = 0; v < n; ++v)
      costs.push_back(make_rational(1 + static_cast<long long>(rng.uniform_u64(32)), 32));
    const Rational t = make_rational(1 + static_cast<long long>(rng.uniform_u64(48)), 24);

    const Valuation val = Valuation::graph_supermodular(g);
    CHECK(demand_mincut(g, t, costs) == demand_bruteforce(val, prices_for_contract(costs, t)));
  }
}

TEST_CASE("demand guards") {
  const Valuation v = Valuation::graph_supermodular(triangle());
  CHECK_THROWS_AS(demand_bruteforce(v, PriceVector(2, Price::inf())), ParameterError);
  std::vector<Rational> costs{Rational(1), Rational(1), Rational(1)};
  CHECK_THROWS_AS(demand_mincut(triangle(), Rational(0), costs), ParameterError);
}
