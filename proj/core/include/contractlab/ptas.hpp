#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contractlab/graph.hpp"
#include "contractlab/lp.hpp"
#include "contractlab/multi_agent.hpp"
#include "contractlab/rng.hpp"
#include "contractlab/sets.hpp"

namespace contractlab {

/// Knobs of the additive approximation scheme. The theory's repetition
/// count (n^Theta(log(1/eps)/eps^4)) and multiset size ((3^6/eps^4) ln n)
/// are far beyond desk scale; both are plain knobs here with defaults
/// reps = 200 and m = min(n, ceil(40 ln n)). The theory's guarantee needs
/// epsilon <= 1/7; any epsilon in (0, 1) is accepted for experiments.
struct PtasConfig {
  double epsilon = 0.1;
  int reps = 200;
  int m = 0;  // 0: use the default above
  std::vector<int> size_guesses;         // empty: geometric grid, see below
  std::vector<long long> edge_guesses;   // empty: geometric grid, see below
  double guess_grid_ratio = 0.0;         // 0: use 1 + epsilon
  int rounding_draws = 1;
  std::uint64_t seed = 0;

  void validate() const;

  int effective_m(int n) const;
  /// ceil(eps n / 3) .. n, geometric with the grid ratio.
  std::vector<int> effective_size_guesses(int n) const;
  /// ceil(eps^2 n^2 / 18) .. n^2, geometric with the grid ratio.
  std::vector<long long> effective_edge_guesses(int n) const;
};

/// Scaled sample degrees: d_hat(v) = min(size_guess/m * deg_M(v), n).
struct DegreeEstimates {
  std::vector<double> d_hat;
  int multiset_id = 0;  // repetition the sample came from
  int size_guess = 0;
};

/// m i.i.d. uniform draws from {0..n-1}, with replacement.
std::vector<int> sample_multiset(int n, int m, Rng& rng);

/// Requires m = |M|; multiplicities in M count.
DegreeEstimates degree_estimates(const Graph& g, const std::vector<int>& multiset, int size_guess,
                                 int m);

/// High-degree filter: keeps v with d_hat(v) >= beta n for
/// beta = (1 - eps) eps / 3. The threshold is inclusive.
NodeSet build_H(const DegreeEstimates& est, int n, double eps);

/// Surrogate LP over x_v in [0,1] for v in H:
///   minimize    sum c/d_hat(v) x_v
///   subject to  sum d_hat(v) x_v >= 2 (1-eps) edge_guess
///               sum over H-neighbors u of v of x_u >= d_hat(v)/(1+eps)
/// Requires H nonempty with positive estimates (ModelError otherwise).
LpModel build_lp(const GraphInstance& g, const NodeSet& h, long long edge_guess,
                 const DegreeEstimates& est, double eps);

/// Independent Bernoulli(x*_v) inclusion per column label of the model.
NodeSet round_solution(const LpModel& model, const LpSolution& sol, int n, Rng& rng);

/// The conditioning event of the analysis, checkable when the target set is
/// known (test harnesses): S in H, every H-node has deg_S(v) > (eps beta/9) n,
/// and every estimate on H is within (1 +- eps) of deg_S(v).
bool good_sample_check(const Graph& g, const NodeSet& s_tilde, const NodeSet& h,
                       const DegreeEstimates& est, double eps);

struct PtasCandidateRow {
  int rep = 0;
  int size_guess = 0;
  long long edge_guess = 0;
  int draw = 0;
  int set_size = 0;
  double mu = 0.0;  // -inf sentinel for non-finite sets
};

struct PtasReport {
  // config echo
  double epsilon = 0.0;
  int reps = 0;
  int m = 0;
  int rounding_draws = 0;
  std::uint64_t seed = 0;
  std::vector<int> size_guesses;
  std::vector<long long> edge_guesses;

  // per-stage counts
  long long multisets_drawn = 0;
  long long filters_built = 0;
  long long filters_empty = 0;
  long long lp_infeasible_precheck = 0;  // (rep, size guess) pairs with no feasible LP
  long long lps_solved = 0;
  long long lps_infeasible = 0;
  long long candidates = 0;

  // winner
  std::vector<int> best_set;
  double best_mu = 0.0;
  double best_left = 0.0;
  double best_right = 0.0;
  int winner_rep = -1;  // -1: the empty set won
  int winner_size_guess = 0;
  long long winner_edge_guess = 0;
  int winner_draw = 0;

  std::vector<PtasCandidateRow> candidate_table;
};

struct PtasResult {
  NodeSet best;
  UtilityBreakdown value;
  PtasReport report;
};

/// The full scheme: per repetition draw a multiset, per size guess scale the
/// estimates and build H, per edge guess solve the surrogate LP and round it
/// rounding_draws times; every rounded set plus the empty set is a candidate
/// and the exact-mu argmax wins (ties: smaller set, then smallest mask).
/// Deterministic given (instance, config, seed); repetitions run in
/// parallel on independent derived streams and merge order-independently.
PtasResult ptas_solve(const GraphInstance& g, const PtasConfig& config);

}  // namespace contractlab
