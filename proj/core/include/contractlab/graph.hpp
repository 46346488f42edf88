#pragma once

#include <utility>
#include <vector>

#include "contractlab/rational.hpp"
#include "contractlab/sets.hpp"

namespace contractlab {

/// Undirected simple graph on nodes 0..n-1. Edges are stored sorted and
/// deduplicated (u < v); adjacency rows are precomputed as NodeSets.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const NodeSet& neighbors(int v) const { return adj_[v]; }

  /// Adjacency row as a plain bitmask; only valid when n <= 63.
  ActionSet neighbors_mask(int v) const { return adj_mask_[v]; }

  long long e_max() const { return static_cast<long long>(n_) * (n_ - 1) / 2; }

  int degree(int v) const { return adj_[v].count(); }
  int degree_in(int v, const NodeSet& s) const { return (adj_[v] & s).count(); }

  /// Number of edges with both endpoints inside s.
  long long edges_within(const NodeSet& s) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<NodeSet> adj_;
  std::vector<ActionSet> adj_mask_;
};

/// A U-GSC instance: graph plus the uniform cost in the reparameterized
/// convention (the 1/E_max factor is already absorbed, so cost is in [0, 1)).
struct GraphInstance {
  Graph graph;
  Rational cost;

  GraphInstance() = default;
  GraphInstance(Graph g, Rational reparameterized_cost);

  int n() const { return graph.n(); }
};

/// Convenience builders used heavily in tests.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// Turan graph T(n, r): complete r-partite with balanced parts (no
/// (r+1)-clique).
Graph turan_graph(int n, int r);

}  // namespace contractlab
