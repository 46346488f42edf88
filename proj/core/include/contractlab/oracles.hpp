#pragma once

#include <functional>
#include <span>
#include <vector>

#include "contractlab/graph.hpp"
#include "contractlab/rational.hpp"
#include "contractlab/sets.hpp"
#include "contractlab/valuation.hpp"

namespace contractlab {

/// A price with a distinguished infinite marker (used for t = 0 contracts
/// and for incentive payments to zero-marginal agents).
struct Price {
  Rational value;
  bool infinite = false;

  static Price inf() { return Price{Rational(0), true}; }
  static Price finite(Rational v) { return Price{std::move(v), false}; }
};

using PriceVector = std::vector<Price>;

/// Prices c_i / t for contract t > 0; all-infinite for t = 0.
PriceVector prices_for_contract(std::span<const Rational> costs, const Rational& t);

struct OracleStats {
  long long demand_calls = 0;
  long long value_calls = 0;
};

/// Exact demand query by enumeration, guarded to n <= 24.
///
/// Returns a maximizer of f(S) - sum of prices; among maximizers, one with
/// maximum f(S); among those, the numerically smallest bitmask.
ActionSet demand_bruteforce(const Valuation& v, const PriceVector& prices);

/// Demand oracle for graph rewards via project selection: maximizes
/// t * f(S) - c(S) for f(S) = |E(S)| / E_max, t > 0.
///
/// Each edge becomes a project node with profit t / E_max, each vertex a
/// prerequisite with its cost; a maximum flow is computed on exactly scaled
/// integer capacities and the MAXIMAL source-side min cut (complement of the
/// residual set that reaches the sink) is returned, restricted to vertex
/// nodes. For supermodular utilities the maximizer family is a lattice, so
/// this realizes the tie-break in favor of higher reward without
/// perturbation, and agrees with demand_bruteforce bit for bit.
ActionSet demand_mincut(const Graph& g, const Rational& t, std::span<const Rational> costs);

/// Agent best response, Phi(t) = argmax over S of t * f(S) - c(S), with ties
/// broken in favor of higher reward. Binds a valuation, costs, and a demand
/// backend; increments stats.demand_calls once per t > 0 evaluation.
class AgentOracle {
 public:
  using DemandFn = std::function<ActionSet(const Rational& t)>;

  AgentOracle(DemandFn demand, OracleStats* stats) : demand_(std::move(demand)), stats_(stats) {}

  /// Phi(t). t = 0 yields the empty set without a demand call.
  ActionSet at(const Rational& t);

  OracleStats& stats() { return *stats_; }

 private:
  DemandFn demand_;
  OracleStats* stats_;
};

/// Agent oracle backed by demand_bruteforce at prices c_i / t.
AgentOracle make_bruteforce_agent_oracle(const Valuation& v, std::span<const Rational> costs,
                                         OracleStats& stats);

/// Agent oracle backed by the min-cut demand oracle (graph valuations only).
AgentOracle make_mincut_agent_oracle(const Graph& g, std::span<const Rational> costs,
                                     OracleStats& stats);

}  // namespace contractlab
