#pragma once

#include <vector>

#include "contractlab/graph.hpp"
#include "contractlab/rational.hpp"
#include "contractlab/sets.hpp"

namespace contractlab {

enum class ValuationKind { additive, graph_supermodular, explicit_table };

/// A reward (value) oracle over action sets: f : 2^[n] -> [0, 1], exact.
///
/// Three payloads are supported: additive weights, a graph (edge-density
/// rewards f(S) = |E(S)| / C(n,2)), and an explicit 2^n table. Tables exist
/// as test oracles and are guarded to n <= 16. Valuations are immutable
/// after construction and safe to share across threads.
class Valuation {
 public:
  static Valuation additive(std::vector<Rational> weights);
  static Valuation graph_supermodular(Graph g);
  static Valuation explicit_table(int n, std::vector<Rational> values);

  int n() const { return n_; }
  ValuationKind kind() const { return kind_; }

  /// Exact f(S). For the graph kind this is |E(S)| / C(n,2).
  Rational value(ActionSet s) const;

  /// f(S + i) - f(S); requires i not in S. Graph kind: deg_S(i) / C(n,2).
  Rational marginal(int i, ActionSet s) const;

  /// Exhaustive increasing-marginal-returns check (guarded to n <= 16):
  /// every (S, i, j) with i,j outside S must satisfy f(i|S) <= f(i|S+j).
  bool is_supermodular() const;

  /// Checks f(empty) = 0, f <= 1, and monotonicity under inclusion.
  /// Table kind is checked exhaustively (n <= 16 guard).
  bool is_monotone_normalized() const;

  const std::vector<Rational>& weights() const { return weights_; }
  const Graph& graph() const { return graph_; }

 private:
  Valuation() = default;

  ValuationKind kind_ = ValuationKind::additive;
  int n_ = 0;
  std::vector<Rational> weights_;  // additive
  Graph graph_;                    // graph_supermodular
  std::vector<Rational> table_;    // explicit_table, 2^n entries
};

}  // namespace contractlab
