#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "contractlab/graph.hpp"
#include "contractlab/rational.hpp"
#include "contractlab/sets.hpp"

namespace contractlab {

/// A generated U-GSC instance plus construction parameters and analytic
/// targets. Metadata values are strings (rationals in "p/q" form) so they
/// serialize unchanged.
struct GeneratedInstance {
  GraphInstance instance;
  std::string provenance;  // kclique-reduction | example1 | lsac | gnp | planted-clique
  std::map<std::string, std::string> metadata;
};

/// k-clique hardness instance: keeps the base graph and sets the
/// reparameterized cost to (k-2)/(k-1). When the base has a k-clique the
/// optimum is exactly k / (2 E_max (k-1)); without one it is 0.
GeneratedInstance gen_kclique_reduction(const Graph& base, int k);

/// The densest-subgraph counterexample family: a clique of n/6 nodes, n/3
/// extra nodes each adjacent to the whole clique, and a disjoint complete
/// bipartite block with parts of n/4 nodes, at cost 1/4. Requires n to be a
/// positive multiple of 12. The bipartite block alone earns at least 1/16
/// while every densest-k subgraph stays below 3/50.
GeneratedInstance gen_example1(int n);

/// Nodes n/2..3n/4-1 of gen_example1 (one bipartite part), handy for tests.
NodeSet example1_bipartite_block(int n);

/// The Appendix closed form for the utility of the densest-(delta n)
/// subgraph of the example1 family, under the asymptotic 2/n^2 edge
/// normalization (exact values differ by O(1/n) discretization).
double example1_densest_mu_approx(double delta);

/// Almost-clique promise instance: base graph at reparameterized cost
/// (1 - eps). For a promised clique of size k the metadata records the exact
/// utility of that clique, (1 - (1-eps) k/(k-1)) * f(K), together with the
/// negative-case ceiling eps (1-eps) f(K). Pass promised_clique_size = 0
/// when no clique is promised.
GeneratedInstance gen_lsac(const Graph& base, const Rational& eps, int promised_clique_size = 0);

/// Clique of `clique_size` planted on nodes 0..clique_size-1; every other
/// pair is an edge independently with probability p_background.
GeneratedInstance gen_planted(int n, int clique_size, double p_background, std::uint64_t seed,
                              const Rational& cost = Rational(1, 2));

/// Erdos-Renyi G(n, p) at the given uniform cost.
GeneratedInstance gen_gnp(int n, double p, std::uint64_t seed, const Rational& cost = Rational(1, 2));

/// Exact k-clique decision by enumeration (n <= 26).
bool has_k_clique(const Graph& g, int k);

/// Exact densest subgraph on exactly k nodes by enumeration (n <= 26);
/// ties resolve to the numerically smallest bitmask.
NodeSet densest_k_bruteforce(const Graph& g, int k);

/// One parallel scan over all subsets returning, for every size k in 1..n,
/// the densest k-node subgraph (same tie-break). Guarded to n <= 26.
std::vector<NodeSet> densest_per_size(const Graph& g);

}  // namespace contractlab
