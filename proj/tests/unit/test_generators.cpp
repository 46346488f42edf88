#include <doctest.h>

#include <cmath>

#include "contractlab/generators.hpp"
#include "contractlab/multi_agent.hpp"

using namespace contractlab;

TEST_CASE("k-clique reduction instances") {
  const GeneratedInstance k4 = gen_kclique_reduction(complete_graph(4), 4);
  CHECK(k4.instance.cost == make_rational(2, 3));
  CHECK(k4.metadata.at("positive_case_mu") == "1/9");
  const auto [set, mu] = bruteforce_optimum(k4.instance);
  CHECK(mu == make_rational(1, 9));
  CHECK(set.count() == 4);

  const GeneratedInstance turan = gen_kclique_reduction(turan_graph(9, 3), 4);
  CHECK_FALSE(has_k_clique(turan.instance.graph, 4));
  const auto [tset, tmu] = bruteforce_optimum(turan.instance);
  CHECK(tmu == Rational(0));
  CHECK(tset.empty());

  CHECK_THROWS_AS(gen_kclique_reduction(complete_graph(4), 2), ParameterError);
}

TEST_CASE("example-1 construction") {
  CHECK_THROWS_AS(gen_example1(13), ParameterError);
  CHECK_THROWS_AS(gen_example1(0), ParameterError);

  const int n = 24;
  const GeneratedInstance gen = gen_example1(n);
  const Graph& g = gen.instance.graph;
  // component sizes: 4-clique, 8 periphery, two parts of 6
  CHECK(g.n() == 24);
  CHECK(g.edge_count() == 6 + 4 * 8 + 36);

  const UtilityBreakdown bip = mu_p(gen.instance, example1_bipartite_block(n));
  CHECK(bip.mu == make_rational(3, 46));  // (1/2) (36/276)
  CHECK(bip.mu >= make_rational(1, 16));
  CHECK(parse_rational(gen.metadata.at("mu_bipartite")) == bip.mu);

  // densest 4 nodes are exactly the clique
  const NodeSet d4 = densest_k_bruteforce(g, 4);
  CHECK(d4.to_indices() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("example-1 closed forms are continuous at the regime edges") {
  const double at_sixth = example1_densest_mu_approx(1.0 / 6.0);
  CHECK(at_sixth == doctest::Approx(3.0 / 144.0));
  const double left = example1_densest_mu_approx(1.0 / 6.0 - 1e-9);
  CHECK(std::abs(at_sixth - left) < 1e-6);
  CHECK(example1_densest_mu_approx(0.5) == doctest::Approx(25.0 / 432.0));
  // the middle regime is strictly unprofitable
  CHECK(example1_densest_mu_approx(0.6) < 0.0);
}

TEST_CASE("almost-clique generator") {
  const Rational eps(1, 4);
  const int n = 8;
  const GeneratedInstance gen = gen_lsac(complete_graph(n), eps, n);
  CHECK(gen.instance.cost == make_rational(3, 4));

  // delta = 1: the whole graph realizes the exact closed form
  const UtilityBreakdown u = mu_p(gen.instance, NodeSet::full(n));
  const Rational expect = (Rational(1) - make_rational(3, 4) * n / (n - 1)) * Rational(1);
  CHECK(u.mu == expect);
  CHECK(parse_rational(gen.metadata.at("clique_mu")) == expect);
  // and it approaches eps f(K) from below
  CHECK(u.mu < eps);
  CHECK(u.mu > eps - make_rational(1, n - 1));

  CHECK_THROWS_AS(gen_lsac(complete_graph(4), Rational(1)), ParameterError);
}

TEST_CASE("random instance generators are seed-deterministic") {
  const GeneratedInstance a = gen_gnp(20, 0.3, 5, make_rational(1, 3));
  const GeneratedInstance b = gen_gnp(20, 0.3, 5, make_rational(1, 3));
  CHECK(a.instance.graph.edges() == b.instance.graph.edges());
  const GeneratedInstance c = gen_gnp(20, 0.3, 6, make_rational(1, 3));
  CHECK(a.instance.graph.edges() != c.instance.graph.edges());

  CHECK(gen_gnp(10, 0.0, 1).instance.graph.edge_count() == 0);
  CHECK(gen_gnp(10, 1.0, 1).instance.graph.edge_count() == 45);

  // p = 1 complete graph closed form
  const GeneratedInstance full = gen_gnp(10, 1.0, 2, make_rational(1, 2));
  const UtilityBreakdown u = mu_p(full.instance, NodeSet::full(10));
  CHECK(u.mu == Rational(1) - make_rational(1, 2) * 10 / 9);
}

TEST_CASE("planted clique generator") {
  const GeneratedInstance gen = gen_planted(30, 10, 0.0, 3, make_rational(1, 2));
  CHECK(gen.instance.graph.edge_count() == 45);  // only the clique, p = 0
  NodeSet clique(30);
  for (int v = 0; v < 10; ++v) clique.add(v);
  CHECK(parse_rational(gen.metadata.at("clique_mu")) == mu_p(gen.instance, clique).mu);
  CHECK_THROWS_AS(gen_planted(5, 9, 0.0, 1), ParameterError);
  CHECK_THROWS_AS(gen_planted(5, 2, 1.5, 1), ParameterError);
}

TEST_CASE("clique detection and densest subsets") {
  CHECK(has_k_clique(complete_graph(5), 5));
  CHECK_FALSE(has_k_clique(turan_graph(9, 3), 4));
  CHECK(has_k_clique(turan_graph(9, 3), 3));
  CHECK(has_k_clique(path_graph(4), 2));
  CHECK_FALSE(has_k_clique(path_graph(4), 3));

  const NodeSet best = densest_k_bruteforce(cycle_graph(6), 3);
  CHECK(best.count() == 3);
  // three consecutive nodes carry 2 edges; ties resolve to the smallest mask
  CHECK(best.to_indices() == std::vector<int>{0, 1, 2});

  const std::vector<NodeSet> per_size = densest_per_size(cycle_graph(6));
  CHECK(per_size[3] == best);
  CHECK(per_size[6] == NodeSet::full(6));
}
