#pragma once

#include <string>
#include <vector>

namespace contractlab {

/// Linear program  min c^T x  s.t.  A x >= b,  0 <= x <= 1.
/// This is the exact shape of the surrogate LP used by the PTAS: one
/// edge-count row plus one degree row per node of H. Column labels carry the
/// node ids so solutions can be rounded back to node sets.
struct LpModel {
  struct Row {
    std::vector<std::pair<int, double>> terms;  // (column, coefficient)
    double rhs = 0.0;
  };

  int num_vars = 0;
  std::vector<double> objective;
  std::vector<Row> rows;
  std::vector<int> labels;  // caller-defined column labels (PTAS: node ids)
};

enum class LpStatus { optimal, infeasible };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> x;       // clamped to [0, 1] on extraction
  double objective = 0.0;
  double max_violation = 0.0;  // worst constraint/bound violation of x
  double duality_gap = 0.0;    // |primal - dual| certificate
};

/// Dense two-phase primal simplex. Optimal solutions are certified: the
/// returned point satisfies every constraint within 1e-7 and the objective
/// matches the dual bound within 1e-7 (relative). Persistent degeneracy
/// trips Bland's rule; genuine numerical failure throws SolverError.
LpSolution solve_lp(const LpModel& model);

}  // namespace contractlab
