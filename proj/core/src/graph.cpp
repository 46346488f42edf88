#include "contractlab/graph.hpp"

#include <algorithm>

namespace contractlab {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0 || n > 1'000'000) throw ParameterError("graph node count out of range");
  for (auto& [u, v] : edges) {
    if (u == v) throw ParameterError("self-loop in graph edge list");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParameterError("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ParameterError("duplicate edge in graph edge list");
  edges_ = std::move(edges);

  adj_.assign(n_, NodeSet(n_));
  for (auto [u, v] : edges_) {
    adj_[u].add(v);
    adj_[v].add(u);
  }
  adj_mask_.assign(n_, 0);
  if (n_ <= 63) {
    for (int v = 0; v < n_; ++v) adj_mask_[v] = adj_[v].to_mask();
  }
}

long long Graph::edges_within(const NodeSet& s) const {
  long long twice = 0;
  for (int v = 0; v < n_; ++v) {
    if (s.contains(v)) twice += degree_in(v, s);
  }
  return twice / 2;
}

GraphInstance::GraphInstance(Graph g, Rational reparameterized_cost)
    : graph(std::move(g)), cost(std::move(reparameterized_cost)) {
  if (graph.n() < 2) throw ParameterError("U-GSC instance needs at least 2 nodes");
  if (cost < 0 || cost >= 1)
    throw ParameterError("reparameterized cost must lie in [0, 1), got " +
                         rational_to_string(cost));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  if (n > 2) e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

Graph turan_graph(int n, int r) {
  if (r < 1) throw ParameterError("turan_graph needs r >= 1");
  // node v belongs to part v % r
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u % r != v % r) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

}  // namespace contractlab
