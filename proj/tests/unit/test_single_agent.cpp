#include <doctest.h>

#include "contractlab/rng.hpp"
#include "contractlab/single_agent.hpp"

using namespace contractlab;

namespace {

BreakpointCurve solve(const Valuation& v, const std::vector<Rational>& costs,
                      OracleStats* stats_out = nullptr) {
  OracleStats stats;
  AgentOracle oracle = make_bruteforce_agent_oracle(v, costs, stats);
  BreakpointCurve curve = breakpoints(v, costs, oracle);
  if (stats_out) *stats_out = stats;
  return curve;
}

}  // namespace

TEST_CASE("intersection contract formula") {
  const Valuation v = Valuation::explicit_table(
      2, {Rational(0), make_rational(1, 3), make_rational(1, 2), make_rational(2, 3)});
  const std::vector<Rational> costs{make_rational(1, 12), make_rational(1, 6)};

  // IC(empty, {1}) = (0 - c1)/(0 - f1) = (1/6)/(1/2) = 1/3
  CHECK(intersection_contract(kEmptySet, 0b10, v, costs) == make_rational(1, 3));
  // f(L)=1/3, c(L)=1/12 against f(R)=2/3, c(R)=1/4
  CHECK(intersection_contract(0b01, 0b11, v, costs) == make_rational(1, 2));
  CHECK_THROWS_AS(intersection_contract(0b01, 0b01, v, costs), DegeneratePairError);
}

TEST_CASE("single action curve") {
  const Valuation v = Valuation::explicit_table(1, {Rational(0), Rational(1)});
  const std::vector<Rational> costs{make_rational(1, 2)};
  const BreakpointCurve curve = solve(v, costs);
  REQUIRE(curve.points.size() == 2);
  CHECK(curve.points[0].t == Rational(0));
  CHECK(curve.points[0].set == kEmptySet);
  CHECK(curve.points[1].t == make_rational(1, 2));
  CHECK(curve.points[1].set == 0b1);
}

TEST_CASE("nothing demanded when costs exceed rewards") {
  const Valuation v =
      Valuation::additive({make_rational(1, 2), make_rational(1, 2)});
  const std::vector<Rational> costs{Rational(2), Rational(3)};
  const BreakpointCurve curve = solve(v, costs);
  REQUIRE(curve.points.size() == 1);
  CHECK(curve.points[0].t == Rational(0));
  CHECK(curve.points[0].set == kEmptySet);
}

TEST_CASE("two additive actions enter at their own thresholds") {
  const Valuation v = Valuation::additive({make_rational(1, 2), make_rational(1, 2)});
  const std::vector<Rational> costs{make_rational(1, 4), make_rational(1, 8)};
  const BreakpointCurve curve = solve(v, costs);
  REQUIRE(curve.points.size() == 3);
  CHECK(curve.points[1].t == make_rational(1, 4));
  CHECK(curve.points[1].set == 0b10);  // the cheaper action first
  CHECK(curve.points[2].t == make_rational(1, 2));
  CHECK(curve.points[2].set == 0b11);
}

TEST_CASE("brute-force oracle agrees on hand cases") {
  const Valuation v = Valuation::additive({make_rational(1, 2), make_rational(1, 2)});
  const std::vector<Rational> costs{make_rational(1, 4), make_rational(1, 8)};
  const BreakpointCurve truth = bruteforce_breakpoints(v, costs);
  REQUIRE(truth.points.size() == 3);
  CHECK(truth.points[1].t == make_rational(1, 4));
  CHECK(truth.points[2].t == make_rational(1, 2));

  const Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  const Valuation gv = Valuation::graph_supermodular(tri);
  const std::vector<Rational> unif{make_rational(1, 9), make_rational(1, 9), make_rational(1, 9)};
  const BreakpointCurve fast = solve(gv, unif);
  const BreakpointCurve slow = bruteforce_breakpoints(gv, unif);
  REQUIRE(fast.points.size() == slow.points.size());
  for (std::size_t i = 0; i < fast.points.size(); ++i) {
    CHECK(fast.points[i].t == slow.points[i].t);
    CHECK(fast.points[i].set == slow.points[i].set);
  }
}

TEST_CASE("curves match the exhaustive oracle on random supermodular tables") {
  for (int trial = 0; trial < 25; ++trial) {
    Rng rng(derive_seed(0x5A7E, trial));
    const int n = 8;
    // supermodular: weighted all-in indicators over hyperedges
    std::vector<std::pair<ActionSet, long long>> hyper;
    long long total = 0;
    for (int e = 0; e < n + 2; ++e) {
      const int size = 1 + static_cast<int>(rng.uniform_u64(3));
      ActionSet t = 0;
      while (std::popcount(t) < size) t |= singleton(static_cast<int>(rng.uniform_u64(n)));
      const long long w = 1 + static_cast<long long>(rng.uniform_u64(8));
      hyper.emplace_back(t, w);
      total += w;
    }
    std::vector<Rational> table(std::size_t{1} << n);
    for (ActionSet s = 0; s <= full_set(n); ++s) {
      long long acc = 0;
      for (const auto& [t, w] : hyper)
        if (is_subset(t, s)) acc += w;
      table[s] = make_rational(acc, total);
    }
    const Valuation v = Valuation::explicit_table(n, std::move(table));
    std::vector<Rational> costs;
    for (int i = 0; i < n; ++i)
      costs.push_back(make_rational(1 + static_cast<long long>(rng.uniform_u64(96)), 64));

    OracleStats stats;
    AgentOracle oracle = make_bruteforce_agent_oracle(v, costs, stats);
    const BreakpointCurve fast = breakpoints(v, costs, oracle);
    const BreakpointCurve slow = bruteforce_breakpoints(v, costs);

    REQUIRE(fast.points.size() == slow.points.size());
    for (std::size_t i = 0; i < fast.points.size(); ++i) {
      CHECK(fast.points[i].t == slow.points[i].t);
      CHECK(fast.points[i].set == slow.points[i].set);
    }
    CHECK(stats.demand_calls <= 2 * static_cast<long long>(fast.points.size()) + 1);
    CHECK(verify_nested_chain(fast, n));
  }
}

TEST_CASE("optimal contract picks the best breakpoint") {
  SUBCASE("trivial curve") {
    const Valuation v = Valuation::additive({make_rational(1, 2)});
    BreakpointCurve curve;
    curve.points.push_back({Rational(0), kEmptySet});
    const ContractChoice best = optimal_contract(curve, v);
    CHECK(best.t == Rational(0));
    CHECK(best.set == kEmptySet);
    CHECK(best.utility == Rational(0));
  }
  SUBCASE("single action") {
    const Valuation v = Valuation::explicit_table(1, {Rational(0), Rational(1)});
    const std::vector<Rational> costs{make_rational(1, 2)};
    const ContractChoice best = optimal_contract(solve(v, costs), v);
    CHECK(best.t == make_rational(1, 2));
    CHECK(best.set == 0b1);
    CHECK(best.utility == make_rational(1, 2));
  }
  SUBCASE("matches exhaustive argmax on a random instance") {
    Rng rng(derive_seed(0x0b7, 3));
    const int n = 8;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int w = u + 1; w < n; ++w)
        if (rng.bernoulli(0.6)) edges.emplace_back(u, w);
    const Valuation v = Valuation::graph_supermodular(Graph(n, std::move(edges)));
    std::vector<Rational> costs;
    for (int i = 0; i < n; ++i)
      costs.push_back(make_rational(1 + static_cast<long long>(rng.uniform_u64(32)), 64));

    const BreakpointCurve truth = bruteforce_breakpoints(v, costs);
    const ContractChoice best = optimal_contract(truth, v);
    Rational exhaustive(0);
    for (const auto& bp : truth.points) {
      const Rational u = (Rational(1) - bp.t) * v.value(bp.set);
      if (u > exhaustive) exhaustive = u;
    }
    CHECK(best.utility == exhaustive);
  }
}

TEST_CASE("nested chain checker") {
  BreakpointCurve bad;
  bad.points.push_back({Rational(0), kEmptySet});
  bad.points.push_back({make_rational(1, 4), 0b01});
  bad.points.push_back({make_rational(1, 2), 0b10});
  CHECK_FALSE(verify_nested_chain(bad, 2));

  BreakpointCurve good;
  good.points.push_back({Rational(0), kEmptySet});
  good.points.push_back({make_rational(1, 4), 0b01});
  good.points.push_back({make_rational(1, 2), 0b11});
  CHECK(verify_nested_chain(good, 2));
  CHECK_FALSE(verify_nested_chain(good, 1));  // longer than n + 1
}

TEST_CASE("min-cut and enumeration oracles give the same curve") {
  for (int trial = 0; trial < 15; ++trial) {
    Rng rng(derive_seed(0x3c3, trial));
    const int n = 4 + static_cast<int>(rng.uniform_u64(7));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int w = u + 1; w < n; ++w)
        if (rng.bernoulli(0.55)) edges.emplace_back(u, w);
    const Graph g(n, std::move(edges));
    const Valuation v = Valuation::graph_supermodular(g);
    std::vector<Rational> costs;
    for (int i = 0; i < n; ++i)
      costs.push_back(
          make_rational(1 + static_cast<long long>(rng.uniform_u64(12)), 4 * g.e_max()));

    OracleStats s1, s2;
    AgentOracle brute = make_bruteforce_agent_oracle(v, costs, s1);
    AgentOracle cut = make_mincut_agent_oracle(g, costs, s2);
    const BreakpointCurve a = breakpoints(v, costs, brute);
    const BreakpointCurve b = breakpoints(v, costs, cut);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      CHECK(a.points[i].t == b.points[i].t);
      CHECK(a.points[i].set == b.points[i].set);
    }
  }
}

TEST_CASE("brute-force oracle guards") {
  const Valuation v = Valuation::additive(std::vector<Rational>(13, make_rational(1, 16)));
  const std::vector<Rational> costs(13, make_rational(1, 8));
  CHECK_THROWS_AS(bruteforce_breakpoints(v, costs), SizeError);

  // denominators beyond the integer-key bounds fail loudly, never silently
  const Valuation fine =
      Valuation::additive({make_rational(1, 2), make_rational(1, 2)});
  const std::vector<Rational> huge{make_rational(1, 999999937), make_rational(1, 8)};
  CHECK_THROWS_AS(bruteforce_breakpoints(fine, huge), SizeError);
}
