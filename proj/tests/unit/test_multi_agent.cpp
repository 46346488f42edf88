#include <doctest.h>

#include "contractlab/generators.hpp"
#include "contractlab/multi_agent.hpp"
#include "contractlab/rng.hpp"

using namespace contractlab;

namespace {
GraphInstance triangle_instance(const Rational& c) {
  return GraphInstance(Graph(3, {{0, 1}, {1, 2}, {0, 2}}), c);
}
}  // namespace

TEST_CASE("objective on the triangle") {
  const GraphInstance g = triangle_instance(make_rational(3, 10));
  const UtilityBreakdown full = mu_p(g, NodeSet::full(3));
  CHECK(full.finite);
  CHECK(full.left == make_rational(11, 20));  // 1 - 3 (3/10)/2
  CHECK(full.right == Rational(1));
  CHECK(full.mu == make_rational(11, 20));

  CHECK(mu_p(g, NodeSet(3)).mu == Rational(0));

  // a selected isolated node makes the payment infinite
  GraphInstance path(Graph(3, {{0, 1}}), make_rational(1, 4));
  NodeSet with_isolated(3);
  with_isolated.add(0);
  with_isolated.add(2);
  const UtilityBreakdown u = mu_p(path, with_isolated);
  CHECK_FALSE(u.finite);
  CHECK(u.mu_f() == -std::numeric_limits<double>::infinity());
}

TEST_CASE("payments") {
  const GraphInstance g = triangle_instance(make_rational(3, 10));
  const PriceVector pay = payments_for_set(g, NodeSet::full(3));
  for (int v = 0; v < 3; ++v) {
    CHECK_FALSE(pay[v].infinite);
    CHECK(pay[v].value == make_rational(9, 20));  // (3/10) * 3 / 2
  }

  NodeSet partial(3);
  partial.add(0);
  partial.add(1);
  const PriceVector pay2 = payments_for_set(g, partial);
  CHECK(pay2[2].value == Rational(0));  // outside the set

  GraphInstance path(Graph(3, {{0, 1}}), make_rational(1, 4));
  NodeSet lonely(3);
  lonely.add(2);
  CHECK(payments_for_set(path, lonely)[2].infinite);
}

TEST_CASE("brute-force optimum") {
  SUBCASE("empty graph never profits") {
    GraphInstance g(Graph(4, {}), make_rational(1, 8));
    const auto [set, mu] = bruteforce_optimum(g);
    CHECK(set.empty());
    CHECK(mu == Rational(0));
  }
  SUBCASE("K4 at the reduction cost earns exactly 1/9") {
    GraphInstance g(complete_graph(4), make_rational(2, 3));
    const auto [set, mu] = bruteforce_optimum(g);
    CHECK(set.count() == 4);
    CHECK(mu == make_rational(1, 9));
  }
  SUBCASE("K5 plus an isolated node keeps the clique") {
    GraphInstance g(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3},
                              {2, 4}, {3, 4}}),
                    make_rational(3, 4));
    const auto [set, mu] = bruteforce_optimum(g);
    CHECK(set.count() == 5);
    CHECK_FALSE(set.contains(5));
    CHECK(mu == make_rational(1, 24));  // k/(2 E_max (k-1)) with k=5, E_max=15
  }
  SUBCASE("matches a direct scan with the exact rational objective") {
    for (int trial = 0; trial < 10; ++trial) {
      Rng rng(derive_seed(0xB00, trial));
      const GeneratedInstance gen = gen_gnp(8, 0.5, 30 + trial,
                                            make_rational(1 + static_cast<long long>(rng.uniform_u64(50)), 64));
      const auto [set, mu] = bruteforce_optimum(gen.instance);
      Rational best(0);
      for (ActionSet mask = 0; mask <= full_set(8); ++mask) {
        const UtilityBreakdown u = mu_p(gen.instance, NodeSet::from_mask(8, mask));
        if (u.finite && u.mu > best) best = u.mu;
      }
      CHECK(mu == best);
      CHECK(mu_p(gen.instance, set).mu == best);
    }
  }
}

TEST_CASE("k-core peeling") {
  const Graph path5 = path_graph(5);
  CHECK(k_core(path5, NodeSet::full(5), 2).empty());

  const Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k_core(tri, NodeSet::full(3), 2) == NodeSet::full(3));

  // K5 with a pendant hanging off node 0
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) e.emplace_back(u, v);
  e.emplace_back(0, 5);
  const Graph k5p(6, std::move(e));
  const NodeSet core = k_core(k5p, NodeSet::full(6), 3);
  CHECK(core.count() == 5);
  CHECK_FALSE(core.contains(5));

  // independent of removal order: peeling a sub-range gives the same core
  NodeSet sub(6);
  for (int v = 1; v < 6; ++v) sub.add(v);
  const NodeSet sub_core = k_core(k5p, sub, 3);
  CHECK(sub_core.count() == 4);  // K5 minus node 0 is a K4
}

TEST_CASE("relaxed left objective") {
  const GraphInstance g = triangle_instance(make_rational(3, 10));
  CHECK(relaxed_left(g, NodeSet(3)) == Rational(1));
  CHECK(relaxed_left(g, NodeSet::full(3)) == make_rational(7, 10));  // 1 - 3 (3/10)/3

  // relaxation dominates the true left term whenever that is finite
  for (int trial = 0; trial < 5; ++trial) {
    const GeneratedInstance gen = gen_gnp(9, 0.5, 900 + trial, make_rational(1, 3));
    for (ActionSet mask = 0; mask <= full_set(9); mask += 7) {
      const NodeSet s = NodeSet::from_mask(9, mask);
      const UtilityBreakdown u = mu_p(gen.instance, s);
      if (u.finite) CHECK(relaxed_left(gen.instance, s) >= u.left);
    }
  }
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(GraphInstance(complete_graph(3), Rational(1)), ParameterError);
  CHECK_THROWS_AS(GraphInstance(complete_graph(3), Rational(-1)), ParameterError);
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), ParameterError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ParameterError);
  CHECK_THROWS_AS(Graph(2, {{0, 5}}), ParameterError);
  GraphInstance big(complete_graph(23), make_rational(1, 2));
  CHECK_THROWS_AS(bruteforce_optimum(big), SizeError);
}
