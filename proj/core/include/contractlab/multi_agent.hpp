#pragma once

#include <utility>
#include <vector>

#include "contractlab/graph.hpp"
#include "contractlab/oracles.hpp"
#include "contractlab/rational.hpp"
#include "contractlab/sets.hpp"

namespace contractlab {

/// Exact evaluation of the U-GSC objective, split into its two factors:
/// left = 1 - sum over S of c / deg_S(i), right = |E(S)| / E_max,
/// mu = left * right. `finite` is false exactly when S is nonempty and some
/// selected node has zero degree inside S (infinite incentive payment); in
/// that case mu carries no meaning and the set is dominated by the empty set.
struct UtilityBreakdown {
  Rational left;
  Rational right;
  Rational mu;
  bool finite = true;

  double left_f() const { return to_double(left); }
  double right_f() const { return to_double(right); }
  /// Float mirror; -inf for the non-finite sentinel.
  double mu_f() const;
};

UtilityBreakdown mu_p(const GraphInstance& g, const NodeSet& s);

/// Cheapest equilibrium payments incentivizing exactly S: for i in S,
/// t_i = c * E_max / deg_S(i) (infinite marker when deg_S(i) = 0), else 0.
/// c is the instance's reparameterized cost, so these payments carry the
/// same E_max scaling; divide by E_max for the absolute-cost convention.
PriceVector payments_for_set(const GraphInstance& g, const NodeSet& s);

/// Exact argmax of mu_p over all subsets (guarded to n <= 22). Ties resolve
/// to smaller cardinality, then the numerically smallest bitmask. The subset
/// scan is partitioned across worker threads and merged deterministically.
std::pair<NodeSet, Rational> bruteforce_optimum(const GraphInstance& g);

/// The unique maximal T inside S whose induced degrees are all >= k.
NodeSet k_core(const Graph& g, const NodeSet& s, int k);

/// Same peeling, but returns every removed node in order (each one a
/// minimum-degree node at its removal time, smallest index among ties).
/// Used to watch per-step quantities along the coring run.
std::vector<int> k_core_peel_order(const Graph& g, const NodeSet& s, int k);

/// Relaxed left objective 1 - sum over S of c / (deg_S(i) + 1); finite and
/// >= left(S) everywhere, and monotone along coring runs.
Rational relaxed_left(const GraphInstance& g, const NodeSet& s);

}  // namespace contractlab
