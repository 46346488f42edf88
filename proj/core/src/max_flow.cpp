#include "contractlab/max_flow.hpp"

#include <algorithm>

namespace contractlab {

void MaxFlow::add_edge(int from, int to, BigInt capacity) {
  head_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, std::move(capacity)});
  head_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, BigInt(0)});
}

bool MaxFlow::bfs(int source, int sink) {
  level_.assign(n_, -1);
  std::queue<int> q;
  level_[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int a : head_[v]) {
      if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
        level_[arcs_[a].to] = level_[v] + 1;
        q.push(arcs_[a].to);
      }
    }
  }
  return level_[sink] >= 0;
}

BigInt MaxFlow::dfs(int v, int sink, BigInt limit) {
  if (v == sink) return limit;
  for (std::size_t& i = iter_[v]; i < head_[v].size(); ++i) {
    const int a = head_[v][i];
    Arc& arc = arcs_[a];
    if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
    BigInt pushed = dfs(arc.to, sink, std::min(limit, arc.cap));
    if (pushed > 0) {
      arc.cap -= pushed;
      arcs_[a ^ 1].cap += pushed;
      return pushed;
    }
  }
  level_[v] = -1;
  return BigInt(0);
}

BigInt MaxFlow::run(int source, int sink) {
  BigInt total = 0;
  BigInt cap_sum = 0;
  for (const auto& arc : arcs_) cap_sum += arc.cap;
  while (bfs(source, sink)) {
    iter_.assign(n_, 0);
    for (;;) {
      BigInt pushed = dfs(source, sink, cap_sum);
      if (pushed == 0) break;
      total += pushed;
    }
  }
  return total;
}

std::vector<bool> MaxFlow::residual_reaches_sink(int sink) const {
  // walk residual arcs backwards from the sink: u reaches the sink if some
  // residual arc u -> v exists with v already reaching it
  std::vector<bool> reaches(n_, false);
  reaches[sink] = true;
  std::queue<int> q;
  q.push(sink);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int a : head_[v]) {
      // arc a is v -> u; its pair a^1 is the arc u -> v whose residual we need
      const int u = arcs_[a].to;
      if (!reaches[u] && arcs_[a ^ 1].cap > 0) {
        reaches[u] = true;
        q.push(u);
      }
    }
  }
  return reaches;
}

}  // namespace contractlab
