#pragma once

#include <queue>
#include <vector>

#include "contractlab/rational.hpp"

namespace contractlab {

/// Dinic's max flow on exact big-integer capacities. Small networks only
/// (the demand oracle builds one node per edge and per vertex), so the
/// arbitrary-precision arithmetic costs nothing measurable and the min cut
/// is exact by construction.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : n_(n), head_(n) {}

  void add_edge(int from, int to, BigInt capacity);

  BigInt run(int source, int sink);

  /// After run(): true iff v can reach the sink in the residual graph.
  /// The complement of this set is the maximal source side over all min cuts.
  std::vector<bool> residual_reaches_sink(int sink) const;

 private:
  struct Arc {
    int to;
    BigInt cap;  // remaining capacity
  };

  bool bfs(int source, int sink);
  BigInt dfs(int v, int sink, BigInt limit);

  int n_;
  std::vector<std::vector<int>> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace contractlab
