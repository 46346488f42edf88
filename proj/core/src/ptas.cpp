#include "contractlab/ptas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "contractlab/parallel.hpp"

namespace contractlab {

void PtasConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw ParameterError("epsilon must lie in (0, 1); the additive guarantee analysis assumes (0, 1/7]");
  if (reps < 1) throw ParameterError("reps must be >= 1");
  if (m < 0) throw ParameterError("m must be >= 1 (or 0 for the default)");
  if (rounding_draws < 1) throw ParameterError("rounding_draws must be >= 1");
  if (guess_grid_ratio != 0.0 && guess_grid_ratio <= 1.0)
    throw ParameterError("guess_grid_ratio must exceed 1");
  for (int s : size_guesses)
    if (s < 1) throw ParameterError("size guesses must be positive");
  for (long long k : edge_guesses)
    if (k < 0) throw ParameterError("edge guesses must be nonnegative");
}

int PtasConfig::effective_m(int n) const {
  if (m > 0) return m;
  return std::min<long long>(n, static_cast<long long>(std::ceil(40.0 * std::log(std::max(2, n)))));
}

namespace {
double grid_ratio(const PtasConfig& c) {
  return c.guess_grid_ratio > 1.0 ? c.guess_grid_ratio : 1.0 + c.epsilon;
}
}  // namespace

std::vector<int> PtasConfig::effective_size_guesses(int n) const {
  if (!size_guesses.empty()) return size_guesses;
  const double ratio = grid_ratio(*this);
  std::vector<int> out;
  long long g = std::max<long long>(1, static_cast<long long>(std::ceil(epsilon * n / 3.0)));
  while (g < n) {
    out.push_back(static_cast<int>(g));
    g = std::max(g + 1, static_cast<long long>(std::ceil(static_cast<double>(g) * ratio)));
  }
  out.push_back(n);
  return out;
}

std::vector<long long> PtasConfig::effective_edge_guesses(int n) const {
  if (!edge_guesses.empty()) return edge_guesses;
  const double ratio = grid_ratio(*this);
  const long long top = static_cast<long long>(n) * n;
  std::vector<long long> out;
  long long g = std::max<long long>(
      1, static_cast<long long>(std::ceil(epsilon * epsilon * n * static_cast<double>(n) / 18.0)));
  while (g < top) {
    out.push_back(g);
    g = std::max(g + 1, static_cast<long long>(std::ceil(static_cast<double>(g) * ratio)));
  }
  out.push_back(top);
  return out;
}

std::vector<int> sample_multiset(int n, int m, Rng& rng) {
  if (n < 1 || m < 1) throw ParameterError("sample_multiset needs n >= 1 and m >= 1");
  std::vector<int> out(m);
  for (int i = 0; i < m; ++i) out[i] = static_cast<int>(rng.uniform_u64(n));
  return out;
}

DegreeEstimates degree_estimates(const Graph& g, const std::vector<int>& multiset, int size_guess,
                                 int m) {
  if (m != static_cast<int>(multiset.size()))
    throw ParameterError("degree_estimates requires m = |M|");
  const int n = g.n();
  std::vector<int> multiplicity(n, 0);
  for (int u : multiset) multiplicity.at(u) += 1;

  DegreeEstimates est;
  est.size_guess = size_guess;
  est.d_hat.assign(n, 0.0);
  const double scale = static_cast<double>(size_guess) / m;
  for (int v = 0; v < n; ++v) {
    long long in_sample = 0;
    for (int u : g.neighbors(v).to_indices()) in_sample += multiplicity[u];
    est.d_hat[v] = std::min(scale * static_cast<double>(in_sample), static_cast<double>(n));
  }
  return est;
}

NodeSet build_H(const DegreeEstimates& est, int n, double eps) {
  const double beta = (1.0 - eps) * eps / 3.0;
  NodeSet h(n);
  for (int v = 0; v < n; ++v)
    if (est.d_hat[v] >= beta * n) h.add(v);
  return h;
}

LpModel build_lp(const GraphInstance& g, const NodeSet& h, long long edge_guess,
                 const DegreeEstimates& est, double eps) {
  if (h.empty()) throw ModelError("build_lp requires a nonempty filter set H");
  const std::vector<int> nodes = h.to_indices();
  std::vector<int> col_of(g.n(), -1);
  for (std::size_t j = 0; j < nodes.size(); ++j) col_of[nodes[j]] = static_cast<int>(j);

  LpModel model;
  model.num_vars = static_cast<int>(nodes.size());
  model.labels = nodes;
  model.objective.resize(nodes.size());
  const double c = to_double(g.cost);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double dh = est.d_hat[nodes[j]];
    if (!(dh > 0.0)) throw ModelError("zero degree estimate inside H");
    model.objective[j] = c / dh;
  }

  LpModel::Row edges_row;
  edges_row.rhs = 2.0 * (1.0 - eps) * static_cast<double>(edge_guess);
  for (std::size_t j = 0; j < nodes.size(); ++j)
    edges_row.terms.emplace_back(static_cast<int>(j), est.d_hat[nodes[j]]);
  model.rows.push_back(std::move(edges_row));

  for (std::size_t j = 0; j < nodes.size(); ++j) {
    LpModel::Row deg_row;
    deg_row.rhs = est.d_hat[nodes[j]] / (1.0 + eps);
    for (int u : (g.graph.neighbors(nodes[j]) & h).to_indices())
      deg_row.terms.emplace_back(col_of[u], 1.0);
    model.rows.push_back(std::move(deg_row));
  }
  return model;
}

NodeSet round_solution(const LpModel& model, const LpSolution& sol, int n, Rng& rng) {
  if (sol.status != LpStatus::optimal) throw ParameterError("rounding requires an optimal solution");
  NodeSet out(n);
  for (int j = 0; j < model.num_vars; ++j) {
    const double p = std::clamp(sol.x[j], 0.0, 1.0);
    if (rng.bernoulli(p)) out.add(model.labels[j]);
  }
  return out;
}

bool good_sample_check(const Graph& g, const NodeSet& s_tilde, const NodeSet& h,
                       const DegreeEstimates& est, double eps) {
  if (!s_tilde.is_subset_of(h)) return false;
  const double beta = (1.0 - eps) * eps / 3.0;
  const double deg_floor = eps * beta / 9.0 * g.n();
  for (int v : h.to_indices()) {
    const int deg = g.degree_in(v, s_tilde);
    if (!(deg > deg_floor)) return false;
    const double ratio = est.d_hat[v] / deg;
    if (ratio < 1.0 - eps || ratio > 1.0 + eps) return false;
  }
  return true;
}

namespace {

struct CandidateBest {
  NodeSet set;
  UtilityBreakdown value;
  bool assigned = false;
  int rep = -1, size_guess = 0, draw = 0;
  long long edge_guess = 0;

  // higher mu, then smaller set, then smallest mask
  bool better_than(const CandidateBest& o) const {
    if (!o.assigned) return assigned;
    if (!assigned) return false;
    if (value.mu != o.value.mu) return value.mu > o.value.mu;
    const int a = set.count(), b = o.set.count();
    if (a != b) return a < b;
    return NodeSet::mask_less(set, o.set);
  }
};

struct RepOutcome {
  CandidateBest best;
  std::vector<PtasCandidateRow> rows;
  long long filters_built = 0, filters_empty = 0, precheck_skips = 0;
  long long lps_solved = 0, lps_infeasible = 0;
};

}  // namespace

PtasResult ptas_solve(const GraphInstance& g, const PtasConfig& config) {
  config.validate();
  const int n = g.n();
  const int m = config.effective_m(n);
  const std::vector<int> size_guesses = config.effective_size_guesses(n);
  const std::vector<long long> edge_guesses = config.effective_edge_guesses(n);
  const double eps = config.epsilon;

  std::vector<RepOutcome> outcomes(config.reps);

  parallel_chunks(config.reps, [&](int, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t rep = begin; rep < end; ++rep) {
      RepOutcome& out = outcomes[rep];
      Rng sample_rng(derive_seed(config.seed, 0x5a, rep));
      const std::vector<int> multiset = sample_multiset(n, m, sample_rng);

      // raw sample degrees, scaled per size guess below
      std::vector<int> multiplicity(n, 0);
      for (int u : multiset) multiplicity[u] += 1;
      std::vector<long long> sample_deg(n, 0);
      for (int v = 0; v < n; ++v)
        for (int u : g.graph.neighbors(v).to_indices()) sample_deg[v] += multiplicity[u];

      for (std::size_t sgi = 0; sgi < size_guesses.size(); ++sgi) {
        const int size_guess = size_guesses[sgi];
        DegreeEstimates est;
        est.multiset_id = static_cast<int>(rep);
        est.size_guess = size_guess;
        est.d_hat.assign(n, 0.0);
        const double scale = static_cast<double>(size_guess) / m;
        for (int v = 0; v < n; ++v)
          est.d_hat[v] = std::min(scale * static_cast<double>(sample_deg[v]),
                                  static_cast<double>(n));

        const NodeSet h = build_H(est, n, eps);
        ++out.filters_built;
        if (h.empty()) {
          ++out.filters_empty;
          continue;
        }

        // Both constraint families have nonnegative coefficients, so the LP
        // is feasible iff x = 1 satisfies them. The degree rows do not
        // depend on the edge guess; check them once and bound the guess.
        bool degree_rows_ok = true;
        double sum_dhat = 0.0;
        for (int v : h.to_indices()) {
          sum_dhat += est.d_hat[v];
          if (g.graph.degree_in(v, h) + 1e-12 < est.d_hat[v] / (1.0 + eps)) {
            degree_rows_ok = false;
            break;
          }
        }
        if (!degree_rows_ok) {
          ++out.precheck_skips;
          continue;
        }
        const double guess_cap = sum_dhat / (2.0 * (1.0 - eps));

        for (std::size_t egi = 0; egi < edge_guesses.size(); ++egi) {
          const long long edge_guess = edge_guesses[egi];
          if (static_cast<double>(edge_guess) > guess_cap) {
            ++out.lps_infeasible;
            continue;
          }
          const LpModel model = build_lp(g, h, edge_guess, est, eps);
          const LpSolution sol = solve_lp(model);
          if (sol.status != LpStatus::optimal) {
            ++out.lps_infeasible;
            continue;
          }
          ++out.lps_solved;

          for (int draw = 0; draw < config.rounding_draws; ++draw) {
            Rng round_rng(derive_seed(config.seed, 0xb3, rep,
                                      (static_cast<std::uint64_t>(sgi) << 24) | egi,
                                      static_cast<std::uint64_t>(draw)));
            const NodeSet s = round_solution(model, sol, n, round_rng);
            const UtilityBreakdown value = mu_p(g, s);

            PtasCandidateRow row;
            row.rep = static_cast<int>(rep);
            row.size_guess = size_guess;
            row.edge_guess = edge_guess;
            row.draw = draw;
            row.set_size = s.count();
            row.mu = value.mu_f();
            out.rows.push_back(row);

            if (value.finite) {
              CandidateBest cand{s, value, true, static_cast<int>(rep), size_guess, draw,
                                 edge_guess};
              if (cand.better_than(out.best)) out.best = cand;
            }
          }
        }
      }
    }
  });

  // deterministic merge: empty set is always a candidate and wins ties
  PtasResult result{NodeSet(n), mu_p(g, NodeSet(n)), {}};
  CandidateBest best;
  best.set = NodeSet(n);
  best.value = result.value;
  best.assigned = true;
  best.rep = -1;
  for (const auto& out : outcomes)
    if (out.best.better_than(best)) best = out.best;

  result.best = best.set;
  result.value = best.value;

  PtasReport& report = result.report;
  report.epsilon = eps;
  report.reps = config.reps;
  report.m = m;
  report.rounding_draws = config.rounding_draws;
  report.seed = config.seed;
  report.size_guesses = size_guesses;
  report.edge_guesses = edge_guesses;
  report.multisets_drawn = config.reps;
  for (const auto& out : outcomes) {
    report.filters_built += out.filters_built;
    report.filters_empty += out.filters_empty;
    report.lp_infeasible_precheck += out.precheck_skips;
    report.lps_solved += out.lps_solved;
    report.lps_infeasible += out.lps_infeasible;
    report.candidates += static_cast<long long>(out.rows.size());
    report.candidate_table.insert(report.candidate_table.end(), out.rows.begin(), out.rows.end());
  }
  report.candidates += 1;  // the empty set
  report.best_set = best.set.to_indices();
  report.best_mu = best.value.mu_f();
  report.best_left = best.value.left_f();
  report.best_right = best.value.right_f();
  report.winner_rep = best.rep;
  report.winner_size_guess = best.size_guess;
  report.winner_edge_guess = best.edge_guess;
  report.winner_draw = best.draw;
  return result;
}

}  // namespace contractlab
