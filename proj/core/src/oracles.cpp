#include "contractlab/oracles.hpp"

#include "contractlab/max_flow.hpp"

namespace contractlab {

PriceVector prices_for_contract(std::span<const Rational> costs, const Rational& t) {
  PriceVector p;
  p.reserve(costs.size());
  for (const auto& c : costs) {
    if (t.is_zero())
      p.push_back(Price::inf());
    else
      p.push_back(Price::finite(c / t));
  }
  return p;
}

ActionSet demand_bruteforce(const Valuation& v, const PriceVector& prices) {
  const int n = v.n();
  if (static_cast<int>(prices.size()) != n)
    throw ParameterError("price vector size does not match valuation");
  if (n > 24) throw SizeError("demand_bruteforce guarded to n <= 24");

  ActionSet blocked = 0;
  for (int i = 0; i < n; ++i) {
    if (prices[i].infinite) blocked |= singleton(i);
    else if (prices[i].value < 0)
      throw ParameterError("negative price");
  }

  ActionSet best = 0;
  Rational best_utility = 0;  // empty set: f = 0, price 0
  Rational best_value = 0;
  const ActionSet all = full_set(n);
  for (ActionSet s = 1; s <= all; ++s) {
    if (s & blocked) continue;
    const Rational val = v.value(s);
    Rational utility = val;
    for (int i = 0; i < n; ++i)
      if (set_contains(s, i)) utility -= prices[i].value;
    if (utility > best_utility || (utility == best_utility && val > best_value)) {
      best = s;
      best_utility = std::move(utility);
      best_value = val;
    }
  }
  return best;
}

ActionSet demand_mincut(const Graph& g, const Rational& t, std::span<const Rational> costs) {
  if (t <= 0) throw ParameterError("demand_mincut requires t > 0");
  if (static_cast<int>(costs.size()) != g.n())
    throw ParameterError("cost vector size does not match graph");

  const long long m = g.edge_count();
  const int n = g.n();
  const Rational profit = t / g.e_max();

  // common denominator so every capacity is an exact integer
  BigInt scale = den(profit);
  for (const auto& c : costs) scale = lcm(scale, den(c));

  const BigInt edge_cap = num(profit) * (scale / den(profit));
  BigInt finite_total = edge_cap * m;
  std::vector<BigInt> vertex_cap(n);
  for (int i = 0; i < n; ++i) {
    if (costs[i] < 0) throw ParameterError("negative cost");
    vertex_cap[i] = num(costs[i]) * (scale / den(costs[i]));
    finite_total += vertex_cap[i];
  }
  const BigInt inf_cap = finite_total + 1;

  // nodes: 0 = source, 1..m edge projects, m+1..m+n vertices, m+n+1 = sink
  const int source = 0;
  const int sink = static_cast<int>(m) + n + 1;
  MaxFlow net(sink + 1);
  for (long long e = 0; e < m; ++e) {
    const auto [u, w] = g.edges()[static_cast<std::size_t>(e)];
    net.add_edge(source, static_cast<int>(e) + 1, edge_cap);
    net.add_edge(static_cast<int>(e) + 1, static_cast<int>(m) + 1 + u, inf_cap);
    net.add_edge(static_cast<int>(e) + 1, static_cast<int>(m) + 1 + w, inf_cap);
  }
  for (int i = 0; i < n; ++i) net.add_edge(static_cast<int>(m) + 1 + i, sink, vertex_cap[i]);

  net.run(source, sink);
  const auto reaches_sink = net.residual_reaches_sink(sink);

  ActionSet s = 0;
  for (int i = 0; i < n; ++i)
    if (!reaches_sink[static_cast<int>(m) + 1 + i]) s |= singleton(i);
  return s;
}

ActionSet AgentOracle::at(const Rational& t) {
  if (t < 0) throw ParameterError("contract must be nonnegative");
  if (t.is_zero()) return kEmptySet;
  ++stats_->demand_calls;
  return demand_(t);
}

AgentOracle make_bruteforce_agent_oracle(const Valuation& v, std::span<const Rational> costs,
                                         OracleStats& stats) {
  std::vector<Rational> own(costs.begin(), costs.end());
  return AgentOracle(
      [&v, own = std::move(own)](const Rational& t) {
        return demand_bruteforce(v, prices_for_contract(own, t));
      },
      &stats);
}

AgentOracle make_mincut_agent_oracle(const Graph& g, std::span<const Rational> costs,
                                     OracleStats& stats) {
  std::vector<Rational> own(costs.begin(), costs.end());
  return AgentOracle(
      [&g, own = std::move(own)](const Rational& t) { return demand_mincut(g, t, own); },
      &stats);
}

}  // namespace contractlab
