#include <doctest.h>

#include <cmath>

#include "contractlab/generators.hpp"
#include "contractlab/ptas.hpp"

using namespace contractlab;

TEST_CASE("config validation and derived grids") {
  PtasConfig cfg;
  cfg.epsilon = 0.2;
  cfg.validate();
  cfg.epsilon = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
  cfg.epsilon = 1.0;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
  cfg.epsilon = 0.2;
  cfg.rounding_draws = 0;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
  cfg.rounding_draws = 1;
  cfg.guess_grid_ratio = 0.9;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
  cfg.guess_grid_ratio = 0.0;

  const std::vector<int> sizes = cfg.effective_size_guesses(100);
  REQUIRE_FALSE(sizes.empty());
  CHECK(sizes.front() == 7);  // ceil(0.2 * 100 / 3)
  CHECK(sizes.back() == 100);
  for (std::size_t i = 1; i < sizes.size(); ++i) CHECK(sizes[i] > sizes[i - 1]);

  const std::vector<long long> edges = cfg.effective_edge_guesses(100);
  CHECK(edges.front() == 23);  // ceil(0.04 * 10000 / 18)
  CHECK(edges.back() == 10000);
}

TEST_CASE("multiset sampling") {
  Rng rng(derive_seed(1, 1));
  const std::vector<int> m = sample_multiset(1, 5, rng);
  CHECK(m == std::vector<int>{0, 0, 0, 0, 0});

  Rng a(derive_seed(2, 2)), b(derive_seed(2, 2));
  CHECK(sample_multiset(10, 4, a) == sample_multiset(10, 4, b));
}

TEST_CASE("degree estimates") {
  const Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});

  SUBCASE("no neighbors sampled means zero") {
    const std::vector<int> multiset{1, 2, 3};  // none adjacent to node 1 except 0
    const DegreeEstimates est = degree_estimates(star, multiset, 5, 3);
    CHECK(est.d_hat[1] == 0.0);  // 1's only neighbor, 0, was never drawn
  }
  SUBCASE("saturation clamps at n") {
    // node 0 is adjacent to the whole sample
    const std::vector<int> multiset{1, 2, 3, 4};
    const DegreeEstimates est = degree_estimates(star, multiset, 5, 4);
    CHECK(est.d_hat[0] == 5.0);  // min(5/4 * 4, 5)
  }
  SUBCASE("multiplicities count") {
    const std::vector<int> multiset{1, 1};
    const DegreeEstimates est = degree_estimates(star, multiset, 4, 2);
    CHECK(est.d_hat[0] == 4.0);  // min(4/2 * 2, 5) = 4
    CHECK_THROWS_AS(degree_estimates(star, multiset, 4, 3), ParameterError);
  }
}

TEST_CASE("high-degree filter") {
  const int n = 100;
  const double eps = 0.25;  // beta n = 6.25
  DegreeEstimates est;
  est.d_hat.assign(n, 0.0);
  CHECK(build_H(est, n, eps).empty());

  est.d_hat.assign(n, static_cast<double>(n));
  CHECK(build_H(est, n, eps) == NodeSet::full(n));

  est.d_hat.assign(n, 0.0);
  est.d_hat[7] = 6.25;  // exactly the threshold: included
  est.d_hat[8] = 6.249;
  const NodeSet h = build_H(est, n, eps);
  CHECK(h.contains(7));
  CHECK_FALSE(h.contains(8));
}

TEST_CASE("surrogate LP feasibility boundaries") {
  const int h = 10;
  const GraphInstance clique(complete_graph(h), make_rational(2, 5));
  DegreeEstimates est;
  est.d_hat.assign(h, h - 1.0);
  const NodeSet all = NodeSet::full(h);
  const double eps = 0.1;

  SUBCASE("truth indicator is feasible at the true edge count") {
    const LpModel model = build_lp(clique, all, h * (h - 1) / 2, est, eps);
    const LpSolution sol = solve_lp(model);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.objective <= h * 0.4 / (h - 1.0) + 1e-7);
  }
  SUBCASE("overshooting the edge guess is infeasible") {
    // sum d_hat / (2 (1-eps)) = 50 at d = 9: guess 51 cannot be met
    const LpModel model = build_lp(clique, all, 51, est, eps);
    CHECK(solve_lp(model).status == LpStatus::infeasible);
  }
  SUBCASE("zero estimates are rejected") {
    DegreeEstimates zero;
    zero.d_hat.assign(h, 0.0);
    CHECK_THROWS_AS(build_lp(clique, all, 10, zero, eps), ModelError);
  }
}

TEST_CASE("rounding") {
  const int n = 20;
  LpModel model;
  model.num_vars = n;
  for (int j = 0; j < n; ++j) {
    model.labels.push_back(j);
    model.objective.push_back(1.0);
  }
  LpSolution sol;
  sol.status = LpStatus::optimal;

  sol.x.assign(n, 1.0);
  Rng rng(derive_seed(3, 1));
  CHECK(round_solution(model, sol, n, rng) == NodeSet::full(n));

  sol.x.assign(n, 0.0);
  CHECK(round_solution(model, sol, n, rng).empty());

  // halves concentrate like a binomial
  sol.x.assign(n, 0.5);
  int total = 0;
  for (int draw = 0; draw < 200; ++draw) {
    Rng r(derive_seed(3, 2, draw));
    total += round_solution(model, sol, n, r).count();
  }
  CHECK(std::abs(total / 200.0 - 10.0) < 1.0);
}

TEST_CASE("good sample check") {
  // a 12-clique with 18 isolated extras
  const int n = 30;
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 12; ++u)
    for (int v = u + 1; v < 12; ++v) e.emplace_back(u, v);
  const Graph g(n, std::move(e));
  NodeSet s(n);
  for (int v = 0; v < 12; ++v) s.add(v);
  const double eps = 0.25;

  DegreeEstimates est;
  est.d_hat.assign(n, 0.0);
  for (int v = 0; v < 12; ++v) est.d_hat[v] = g.degree_in(v, s);

  NodeSet h = s;
  CHECK(good_sample_check(g, s, h, est, eps));

  // a node of H with no neighbors in S fails the degree floor
  NodeSet h_extra = h;
  h_extra.add(20);
  est.d_hat[20] = 10.0;
  CHECK_FALSE(good_sample_check(g, s, h_extra, est, eps));

  // an estimate outside (1 +- eps) fails
  est.d_hat[3] = g.degree_in(3, s) * 1.3;
  CHECK_FALSE(good_sample_check(g, s, h, est, eps));

  // S not contained in H fails
  est.d_hat[3] = g.degree_in(3, s);
  NodeSet h_small = h;
  h_small.remove(5);
  CHECK_FALSE(good_sample_check(g, s, h_small, est, eps));
}

TEST_CASE("end to end on toy instances") {
  SUBCASE("empty graph") {
    GraphInstance g(Graph(12, {}), make_rational(1, 4));
    PtasConfig cfg;
    cfg.epsilon = 0.2;
    cfg.reps = 10;
    cfg.rounding_draws = 2;
    const PtasResult result = ptas_solve(g, cfg);
    CHECK(result.best.empty());
    CHECK(result.value.mu == Rational(0));
  }
  SUBCASE("clique with isolated background") {
    // a 30-clique plus 70 isolated nodes at a strictly profitable cost.
    // Within the clique component the best subset is the whole clique, so
    // that value is the target.
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 30; ++u)
      for (int v = u + 1; v < 30; ++v) e.emplace_back(u, v);
    GraphInstance g(Graph(100, std::move(e)), make_rational(1, 2));

    NodeSet clique(100);
    for (int v = 0; v < 30; ++v) clique.add(v);
    double prefix_best = 0.0;
    for (int s = 2; s <= 30; ++s) {
      NodeSet sub(100);
      for (int v = 0; v < s; ++v) sub.add(v);
      prefix_best = std::max(prefix_best, mu_p(g, sub).mu_f());
    }
    CHECK(prefix_best == doctest::Approx(mu_p(g, clique).mu_f()));
    CHECK(prefix_best > 0.0);

    PtasConfig cfg;
    cfg.epsilon = 0.1;
    cfg.reps = 60;
    cfg.rounding_draws = 10;
    cfg.seed = 5;
    const PtasResult result = ptas_solve(g, cfg);
    CHECK(result.value.mu_f() >= prefix_best - 0.1);
    CHECK(result.value.mu >= Rational(0));  // the empty set is always available
  }
  SUBCASE("determinism across runs") {
    const GeneratedInstance gen = gen_planted(30, 10, 0.1, 11, make_rational(1, 2));
    PtasConfig cfg;
    cfg.epsilon = 0.25;
    cfg.reps = 20;
    cfg.rounding_draws = 4;
    cfg.seed = 9;
    const PtasResult a = ptas_solve(gen.instance, cfg);
    const PtasResult b = ptas_solve(gen.instance, cfg);
    CHECK(a.best == b.best);
    CHECK(a.report.candidate_table.size() == b.report.candidate_table.size());
    CHECK(a.report.best_mu == b.report.best_mu);
  }
}
