#include "contractlab/valuation.hpp"

namespace contractlab {

namespace {
constexpr int kTableGuard = 16;
constexpr int kEnumerationGuard = 16;
}  // namespace

Valuation Valuation::additive(std::vector<Rational> weights) {
  Valuation v;
  v.kind_ = ValuationKind::additive;
  v.n_ = static_cast<int>(weights.size());
  if (v.n_ > 63) throw SizeError("additive valuation limited to 63 actions");
  v.weights_ = std::move(weights);
  return v;
}

Valuation Valuation::graph_supermodular(Graph g) {
  if (g.n() < 2) throw ParameterError("graph valuation needs at least 2 nodes");
  if (g.n() > 63) throw SizeError("graph valuation limited to 63 actions");
  Valuation v;
  v.kind_ = ValuationKind::graph_supermodular;
  v.n_ = g.n();
  v.graph_ = std::move(g);
  return v;
}

Valuation Valuation::explicit_table(int n, std::vector<Rational> values) {
  if (n > kTableGuard) throw SizeError("table valuation guarded to n <= 16");
  if (values.size() != (std::size_t{1} << n))
    throw ParameterError("table valuation needs exactly 2^n values");
  Valuation v;
  v.kind_ = ValuationKind::explicit_table;
  v.n_ = n;
  v.table_ = std::move(values);
  return v;
}

Rational Valuation::value(ActionSet s) const {
  switch (kind_) {
    case ValuationKind::additive: {
      Rational acc = 0;
      for (int i = 0; i < n_; ++i)
        if (set_contains(s, i)) acc += weights_[i];
      return acc;
    }
    case ValuationKind::graph_supermodular: {
      long long twice = 0;
      for (int i = 0; i < n_; ++i)
        if (set_contains(s, i)) twice += std::popcount(graph_.neighbors_mask(i) & s);
      return make_rational(twice / 2, graph_.e_max());
    }
    case ValuationKind::explicit_table:
      return table_[s];
  }
  throw InternalError("unreachable valuation kind");
}

Rational Valuation::marginal(int i, ActionSet s) const {
  if (set_contains(s, i)) throw ParameterError("marginal requires i outside S");
  switch (kind_) {
    case ValuationKind::additive:
      return weights_[i];
    case ValuationKind::graph_supermodular:
      return make_rational(std::popcount(graph_.neighbors_mask(i) & s), graph_.e_max());
    case ValuationKind::explicit_table:
      return table_[s | singleton(i)] - table_[s];
  }
  throw InternalError("unreachable valuation kind");
}

bool Valuation::is_supermodular() const {
  if (n_ > kEnumerationGuard) throw SizeError("supermodularity check guarded to n <= 16");
  // local characterization: f(i | S) <= f(i | S + j) for all S and i, j not in S
  const ActionSet all = full_set(n_);
  for (ActionSet s = 0; s <= all; ++s) {
    for (int i = 0; i < n_; ++i) {
      if (set_contains(s, i)) continue;
      const Rational base = marginal(i, s);
      for (int j = 0; j < n_; ++j) {
        if (j == i || set_contains(s, j)) continue;
        if (marginal(i, s | singleton(j)) < base) return false;
      }
    }
  }
  return true;
}

bool Valuation::is_monotone_normalized() const {
  switch (kind_) {
    case ValuationKind::additive: {
      Rational total = 0;
      for (const auto& w : weights_) {
        if (w < 0) return false;
        total += w;
      }
      return total <= 1;
    }
    case ValuationKind::graph_supermodular:
      // edge counts are monotone under inclusion and |E(S)| <= E_max
      return true;
    case ValuationKind::explicit_table: {
      if (n_ > kTableGuard) throw SizeError("monotonicity check guarded to n <= 16");
      if (!table_[0].is_zero()) return false;
      const ActionSet all = full_set(n_);
      for (ActionSet s = 0; s <= all; ++s) {
        if (table_[s] > 1) return false;
        for (int i = 0; i < n_; ++i) {
          if (set_contains(s, i)) continue;
          if (table_[s | singleton(i)] < table_[s]) return false;
        }
      }
      return true;
    }
  }
  throw InternalError("unreachable valuation kind");
}

}  // namespace contractlab
