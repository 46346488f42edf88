#pragma once

#include <span>
#include <vector>

#include "contractlab/oracles.hpp"
#include "contractlab/rational.hpp"
#include "contractlab/sets.hpp"
#include "contractlab/valuation.hpp"

namespace contractlab {

/// One breakpoint of the agent's piecewise-linear utility curve: the
/// smallest contract at which `set` is the agent's best response. `set`
/// stays in demand from t until the next breakpoint.
struct Breakpoint {
  Rational t;
  ActionSet set;
};

/// All breakpoints sorted by contract, starting with the trivial (0, empty).
/// Along the list t is strictly increasing and so is f(set).
struct BreakpointCurve {
  std::vector<Breakpoint> points;

  std::size_t size() const { return points.size(); }
};

/// The contract at which L and R give the agent equal utility:
/// (c(L) - c(R)) / (f(L) - f(R)). Throws DegeneratePairError on f(L) = f(R).
Rational intersection_contract(ActionSet l, ActionSet r, const Valuation& v,
                               std::span<const Rational> costs);

/// Enumerates every breakpoint in (0, 1] by divide and conquer on
/// intersection contracts, then prepends the trivial breakpoint (0, empty).
/// Uses at most 2 |curve| + 1 demand queries. Degenerate instances where
/// nothing is ever demanded yield the single trivial breakpoint.
BreakpointCurve breakpoints(const Valuation& v, std::span<const Rational> costs,
                            AgentOracle& oracle);

/// Ground-truth curve by exhaustive search (n <= 12): computes the
/// intersection contract of every pair of subsets, evaluates the brute-force
/// best response at zero, at every candidate contract, and between
/// consecutive candidates, and reads the curve off the sweep.
///
/// Exact throughout; to stay fast it runs on a common-denominator integer
/// representation and throws SizeError when value/cost denominators are too
/// large for the 128-bit intermediate bounds.
BreakpointCurve bruteforce_breakpoints(const Valuation& v, std::span<const Rational> costs);

struct ContractChoice {
  Rational t;
  ActionSet set;
  Rational utility;  // principal utility (1 - t) * f(set)
};

/// Picks the breakpoint maximizing the principal's utility (1 - t) f(S);
/// ties resolve to the smallest contract.
ContractChoice optimal_contract(const BreakpointCurve& curve, const Valuation& v);

/// True iff demanded sets form a strictly nested chain and the curve has at
/// most n + 1 points (what supermodular rewards guarantee).
bool verify_nested_chain(const BreakpointCurve& curve, int n);

}  // namespace contractlab
