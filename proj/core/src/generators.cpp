#include "contractlab/generators.hpp"

#include <algorithm>

#include "contractlab/multi_agent.hpp"
#include "contractlab/parallel.hpp"
#include "contractlab/rng.hpp"

namespace contractlab {

GeneratedInstance gen_kclique_reduction(const Graph& base, int k) {
  if (k < 3) throw ParameterError("k-clique reduction needs k >= 3");
  GeneratedInstance out;
  const Rational cost = make_rational(k - 2, k - 1);
  out.instance = GraphInstance(base, cost);
  out.provenance = "kclique-reduction";
  out.metadata["k"] = std::to_string(k);
  out.metadata["cost"] = rational_to_string(cost);
  out.metadata["cost_convention"] = "reparameterized";
  out.metadata["e_max"] = std::to_string(base.e_max());
  // utility of a k-clique in the positive case, absolute units
  out.metadata["positive_case_mu"] =
      rational_to_string(make_rational(k, 2 * base.e_max() * (k - 1)));
  return out;
}

GeneratedInstance gen_example1(int n) {
  if (n < 12 || n % 12 != 0) throw ParameterError("example1 needs n to be a positive multiple of 12");
  const int h_end = n / 6;        // clique H
  const int p_end = n / 2;        // P, adjacent to all of H
  const int a_end = 3 * n / 4;    // bipartite part A
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < h_end; ++u)
    for (int v = u + 1; v < h_end; ++v) edges.emplace_back(u, v);
  for (int u = 0; u < h_end; ++u)
    for (int v = h_end; v < p_end; ++v) edges.emplace_back(u, v);
  for (int u = p_end; u < a_end; ++u)
    for (int v = a_end; v < n; ++v) edges.emplace_back(u, v);

  GeneratedInstance out;
  out.instance = GraphInstance(Graph(n, std::move(edges)), Rational(1, 4));
  out.provenance = "example1";
  out.metadata["cost"] = "1/4";
  out.metadata["cost_convention"] = "reparameterized";
  out.metadata["clique_nodes"] = std::to_string(h_end);
  out.metadata["periphery_nodes"] = std::to_string(p_end - h_end);
  out.metadata["bipartite_part"] = std::to_string(n / 4);
  out.metadata["mu_bipartite"] =
      rational_to_string(mu_p(out.instance, example1_bipartite_block(n)).mu);
  out.metadata["mu_bipartite_lower_bound"] = "1/16";
  out.metadata["densest_k_mu_upper_bound"] = "3/50";
  return out;
}

NodeSet example1_bipartite_block(int n) {
  NodeSet s(n);
  for (int v = n / 2; v < n; ++v) s.add(v);
  return s;
}

double example1_densest_mu_approx(double delta) {
  if (delta <= 0.0) return 0.0;
  if (delta <= 1.0 / 6.0) return 3.0 * delta * delta / 4.0;
  if (delta <= 0.5)
    return (-432.0 * delta * delta * delta + 396.0 * delta * delta - 42.0 * delta + 1.0) /
           (864.0 * delta);
  if (delta < 2.0 / 3.0) return -(36.0 * delta * delta - 36.0 * delta + 19.0) / 864.0;
  return (-36.0 * delta * delta + 54.0 * delta - 19.0) * (24.0 * delta - 5.0) /
         (864.0 * (2.0 * delta - 1.0));
}

GeneratedInstance gen_lsac(const Graph& base, const Rational& eps, int promised_clique_size) {
  if (eps <= 0 || eps >= 1) throw ParameterError("lsac needs 0 < eps < 1");
  GeneratedInstance out;
  const Rational cost = Rational(1) - eps;
  out.instance = GraphInstance(base, cost);
  out.provenance = "lsac";
  out.metadata["eps"] = rational_to_string(eps);
  out.metadata["cost"] = rational_to_string(cost);
  out.metadata["cost_convention"] = "reparameterized";
  if (promised_clique_size >= 2) {
    const int k = promised_clique_size;
    const Rational f_k = make_rational(static_cast<long long>(k) * (k - 1) / 2, base.e_max());
    // exact utility of the promised clique; approaches eps * f(K) from below
    const Rational clique_mu = (Rational(1) - cost * k / (k - 1)) * f_k;
    out.metadata["promised_clique"] = std::to_string(k);
    out.metadata["clique_mu"] = rational_to_string(clique_mu);
    out.metadata["positive_case_target"] = rational_to_string(eps * f_k);
    out.metadata["negative_case_ceiling"] = rational_to_string(eps * cost * f_k);
  }
  return out;
}

GeneratedInstance gen_planted(int n, int clique_size, double p_background, std::uint64_t seed,
                              const Rational& cost) {
  if (clique_size < 0 || clique_size > n) throw ParameterError("clique size out of range");
  if (p_background < 0.0 || p_background > 1.0) throw ParameterError("p must lie in [0, 1]");
  Rng rng(derive_seed(seed, 0x9c));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (v < clique_size || rng.bernoulli(p_background)) edges.emplace_back(u, v);
    }
  }
  GeneratedInstance out;
  out.instance = GraphInstance(Graph(n, std::move(edges)), cost);
  out.provenance = "planted-clique";
  out.metadata["clique_size"] = std::to_string(clique_size);
  out.metadata["p_background"] = std::to_string(p_background);
  out.metadata["seed"] = std::to_string(seed);
  out.metadata["cost"] = rational_to_string(cost);
  out.metadata["cost_convention"] = "reparameterized";
  if (clique_size >= 2) {
    NodeSet clique(n);
    for (int v = 0; v < clique_size; ++v) clique.add(v);
    out.metadata["clique_mu"] = rational_to_string(mu_p(out.instance, clique).mu);
  }
  return out;
}

GeneratedInstance gen_gnp(int n, double p, std::uint64_t seed, const Rational& cost) {
  if (p < 0.0 || p > 1.0) throw ParameterError("p must lie in [0, 1]");
  Rng rng(derive_seed(seed, 0xe5));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  GeneratedInstance out;
  out.instance = GraphInstance(Graph(n, std::move(edges)), cost);
  out.provenance = "gnp";
  out.metadata["p"] = std::to_string(p);
  out.metadata["seed"] = std::to_string(seed);
  out.metadata["cost"] = rational_to_string(cost);
  out.metadata["cost_convention"] = "reparameterized";
  return out;
}

namespace {

bool clique_extend(const Graph& g, ActionSet candidates, int need, int from) {
  if (need == 0) return true;
  if (std::popcount(candidates) < need) return false;
  for (int v = from; v < g.n(); ++v) {
    if (!set_contains(candidates, v)) continue;
    if (clique_extend(g, candidates & g.neighbors_mask(v), need - 1, v + 1)) return true;
  }
  return false;
}

}  // namespace

bool has_k_clique(const Graph& g, int k) {
  if (g.n() > 26) throw SizeError("has_k_clique guarded to n <= 26");
  if (k <= 0) return true;
  if (k == 1) return g.n() >= 1;
  if (k == 2) return g.edge_count() >= 1;
  if (k > g.n()) return false;
  return clique_extend(g, full_set(g.n()), k, 0);
}

namespace {

long long edges_within_mask(const Graph& g, ActionSet s) {
  long long twice = 0;
  ActionSet rest = s;
  while (rest) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    twice += std::popcount(g.neighbors_mask(v) & s);
  }
  return twice / 2;
}

// Gosper's hack: next bitmask with the same popcount.
ActionSet next_same_popcount(ActionSet s) {
  const ActionSet c = s & -s;
  const ActionSet r = s + c;
  return (((r ^ s) >> 2) / c) | r;
}

NodeSet densest_exactly_k(const Graph& g, int k) {
  const int n = g.n();
  ActionSet s = full_set(k);
  ActionSet best = s;
  long long best_edges = edges_within_mask(g, s);
  const ActionSet limit = full_set(n);
  while (true) {
    const ActionSet next = next_same_popcount(s);
    if (next > limit || next < s) break;
    s = next;
    const long long e = edges_within_mask(g, s);
    if (e > best_edges) {
      best_edges = e;
      best = s;
    }
  }
  return NodeSet::from_mask(n, best);
}

}  // namespace

NodeSet densest_k_bruteforce(const Graph& g, int k) {
  if (g.n() > 26) throw SizeError("densest_k_bruteforce guarded to n <= 26");
  if (k < 1 || k > g.n()) throw ParameterError("k out of range");
  return densest_exactly_k(g, k);
}

std::vector<NodeSet> densest_per_size(const Graph& g) {
  if (g.n() > 26) throw SizeError("densest_per_size guarded to n <= 26");
  const int n = g.n();
  std::vector<NodeSet> winners(n + 1, NodeSet(n));
  parallel_chunks(n, [&](int, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t k = begin; k < end; ++k) winners[k + 1] = densest_exactly_k(g, static_cast<int>(k) + 1);
  });
  return winners;
}

}  // namespace contractlab
