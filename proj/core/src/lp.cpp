#include "contractlab/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "contractlab/errors.hpp"

namespace contractlab {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-9;
constexpr double kCertTol = 1e-7;

// Dense simplex tableau over the equality form of
//   min c x   s.t.   A x >= b, 0 <= x <= 1.
//
// Rows with b >= 0 keep their surplus column and get an artificial; rows
// with b < 0 are negated so their surplus starts basic. Upper bounds become
// rows x_j + w_j = 1 with w basic. Phase 1 drives the artificials to zero,
// phase 2 optimizes the real objective with artificials barred from
// re-entering. The artificial/slack start columns double as an identity
// block, which makes the duals readable off the final cost row.
class Simplex {
 public:
  explicit Simplex(const LpModel& model) : model_(model) {
    nx_ = model.num_vars;
    m1_ = static_cast<int>(model.rows.size());
    rows_ = m1_ + nx_;
    negated_.assign(m1_, false);
    scol_.assign(m1_, 0);
    acol_.assign(m1_, -1);

    // column layout: x | s | w | artificials
    cols_ = nx_ + m1_ + nx_;
    int art_count = 0;
    for (int i = 0; i < m1_; ++i)
      if (model.rows[i].rhs >= 0) ++art_count;
    const int art_base = cols_;
    cols_ += art_count;

    tab_.assign(rows_ + 1, std::vector<double>(cols_ + 1, 0.0));
    basis_.assign(rows_, -1);

    int next_art = art_base;
    for (int i = 0; i < m1_; ++i) {
      const auto& row = model.rows[i];
      const double sign = row.rhs >= 0 ? 1.0 : -1.0;
      negated_[i] = row.rhs < 0;
      for (const auto& [j, a] : row.terms) tab_[i][j] += sign * a;
      scol_[i] = nx_ + i;
      tab_[i][scol_[i]] = -sign;  // surplus
      tab_[i][cols_] = sign * row.rhs;
      if (!negated_[i]) {
        acol_[i] = next_art++;
        tab_[i][acol_[i]] = 1.0;
        basis_[i] = acol_[i];
      } else {
        basis_[i] = scol_[i];  // surplus starts basic at -b > 0
      }
    }
    for (int j = 0; j < nx_; ++j) {
      const int r = m1_ + j;
      tab_[r][j] = 1.0;
      tab_[r][nx_ + m1_ + j] = 1.0;  // w_j
      tab_[r][cols_] = 1.0;
      basis_[r] = nx_ + m1_ + j;
    }
    first_art_ = art_base;
  }

  LpSolution solve() {
    // phase 1
    set_phase_objective(/*phase1=*/true);
    iterate(/*allow_artificials=*/true);
    if (tab_[rows_][cols_] < -1e-7) {
      LpSolution sol;
      sol.status = LpStatus::infeasible;
      return sol;
    }
    pivot_out_basic_artificials();

    // phase 2
    set_phase_objective(/*phase1=*/false);
    iterate(/*allow_artificials=*/false);
    return extract();
  }

 private:
  void set_phase_objective(bool phase1) {
    auto& obj = tab_[rows_];
    std::fill(obj.begin(), obj.end(), 0.0);
    if (phase1) {
      for (int j = first_art_; j < cols_; ++j) obj[j] = 1.0;
    } else {
      for (int j = 0; j < nx_; ++j) obj[j] = model_.objective[j];
    }
    // price out the basic columns
    for (int i = 0; i < rows_; ++i) {
      const double cb = obj[basis_[i]];
      if (cb == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) obj[j] -= cb * tab_[i][j];
    }
  }

  void iterate(bool allow_artificials) {
    const long long bland_after = 20ll * (rows_ + cols_) + 200;
    const long long hard_cap = 2000ll * (rows_ + cols_) + 20000;
    for (long long iter = 0;; ++iter) {
      if (iter > hard_cap) throw SolverError("simplex exceeded its iteration cap");
      const bool bland = iter > bland_after;
      const int limit = allow_artificials ? cols_ : first_art_;

      int enter = -1;
      double best = -kCostTol;
      for (int j = 0; j < limit; ++j) {
        const double rc = tab_[rows_][j];
        if (rc < best) {
          enter = j;
          best = rc;
          if (bland) break;  // first eligible column
        }
      }
      if (enter < 0) return;  // optimal for this phase

      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < rows_; ++i) {
        const double a = tab_[i][enter];
        if (a <= kPivotTol) continue;
        const double ratio = tab_[i][cols_] / a;
        if (ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 && leave >= 0 && basis_[i] < basis_[leave])) {
          best_ratio = ratio;
          leave = i;
        }
      }
      if (leave < 0) throw SolverError("simplex detected an unbounded direction");
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    auto& pr = tab_[row];
    const double inv = 1.0 / pr[col];
    for (double& v : pr) v *= inv;
    pr[col] = 1.0;
    for (int i = 0; i <= rows_; ++i) {
      if (i == row) continue;
      const double factor = tab_[i][col];
      if (factor == 0.0) continue;
      auto& tr = tab_[i];
      for (int j = 0; j <= cols_; ++j) tr[j] -= factor * pr[j];
      tr[col] = 0.0;
    }
    basis_[row] = col;
  }

  // After phase 1 an artificial may linger in the basis at value zero;
  // swap it for any real column with a nonzero entry, or the row is
  // redundant and harmless.
  void pivot_out_basic_artificials() {
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < first_art_) continue;
      for (int j = 0; j < first_art_; ++j) {
        if (std::abs(tab_[i][j]) > kPivotTol) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  LpSolution extract() const {
    LpSolution sol;
    sol.status = LpStatus::optimal;
    std::vector<double> raw(nx_, 0.0);
    for (int i = 0; i < rows_; ++i)
      if (basis_[i] < nx_) raw[basis_[i]] = tab_[i][cols_];

    sol.x.resize(nx_);
    for (int j = 0; j < nx_; ++j) sol.x[j] = std::clamp(raw[j], 0.0, 1.0);

    double obj = 0.0;
    for (int j = 0; j < nx_; ++j) obj += model_.objective[j] * sol.x[j];
    sol.objective = obj;

    // feasibility of the clamped point against the original model
    double viol = 0.0;
    for (const auto& row : model_.rows) {
      double lhs = 0.0;
      for (const auto& [j, a] : row.terms) lhs += a * sol.x[j];
      viol = std::max(viol, row.rhs - lhs);
    }
    sol.max_violation = viol;

    // duals read off the cost row through the identity start columns:
    // y_i = -rc(start column of row i), with the sign flip for negated rows
    // (their surplus column is +e_i instead of an artificial).
    std::vector<double> y(rows_, 0.0);
    for (int i = 0; i < m1_; ++i) {
      const double rc = negated_[i] ? tab_[rows_][scol_[i]] : tab_[rows_][acol_[i]];
      y[i] = -rc;
    }
    for (int j = 0; j < nx_; ++j) y[m1_ + j] = -tab_[rows_][nx_ + m1_ + j];
    double dual = 0.0;
    for (int i = 0; i < m1_; ++i)
      dual += y[i] * (negated_[i] ? -model_.rows[i].rhs : model_.rows[i].rhs);
    for (int j = 0; j < nx_; ++j) dual += y[m1_ + j];
    sol.duality_gap = std::abs(obj - dual);
    return sol;
  }

  const LpModel& model_;
  int nx_ = 0, m1_ = 0, rows_ = 0, cols_ = 0, first_art_ = 0;
  std::vector<std::vector<double>> tab_;
  std::vector<int> basis_;
  std::vector<bool> negated_;
  std::vector<int> scol_, acol_;
};

}  // namespace

LpSolution solve_lp(const LpModel& model) {
  if (static_cast<int>(model.objective.size()) != model.num_vars)
    throw ModelError("objective size does not match variable count");
  for (const auto& row : model.rows)
    for (const auto& [j, a] : row.terms) {
      if (j < 0 || j >= model.num_vars) throw ModelError("row references unknown column");
      if (!std::isfinite(a)) throw ModelError("non-finite coefficient");
    }

  LpSolution sol = Simplex(model).solve();
  if (sol.status == LpStatus::infeasible) return sol;

  const double scale = std::max(1.0, std::abs(sol.objective));
  if (sol.max_violation > kCertTol || sol.duality_gap > kCertTol * scale)
    throw SolverError("simplex certificate failed: violation " + std::to_string(sol.max_violation)
                      + ", duality gap " + std::to_string(sol.duality_gap));
  return sol;
}

}  // namespace contractlab
