#include "contractlab/multi_agent.hpp"

#include <algorithm>
#include <limits>

#include "contractlab/parallel.hpp"

namespace contractlab {

double UtilityBreakdown::mu_f() const {
  return finite ? to_double(mu) : -std::numeric_limits<double>::infinity();
}

UtilityBreakdown mu_p(const GraphInstance& g, const NodeSet& s) {
  UtilityBreakdown out{Rational(1), Rational(0), Rational(0), true};
  if (s.empty()) return out;  // L = 1, R = 0, mu = 0

  const int n = g.n();
  Rational payment_sum = 0;
  for (int v = 0; v < n; ++v) {
    if (!s.contains(v)) continue;
    const int deg = g.graph.degree_in(v, s);
    if (deg == 0) {
      out.finite = false;
      out.left = 0;
      out.right = make_rational(g.graph.edges_within(s), g.graph.e_max());
      out.mu = 0;
      return out;
    }
    payment_sum += g.cost / deg;
  }
  out.left = Rational(1) - payment_sum;
  out.right = make_rational(g.graph.edges_within(s), g.graph.e_max());
  out.mu = out.left * out.right;
  return out;
}

PriceVector payments_for_set(const GraphInstance& g, const NodeSet& s) {
  PriceVector t(g.n(), Price::finite(Rational(0)));
  for (int v = 0; v < g.n(); ++v) {
    if (!s.contains(v)) continue;
    const int deg = g.graph.degree_in(v, s);
    if (deg == 0)
      t[v] = Price::inf();
    else
      t[v] = Price::finite(g.cost * g.graph.e_max() / deg);
  }
  return t;
}

namespace {

// Fixed-point view of mu_p used by the subset scan: with cost p/q and
// B = lcm(1..n-1), mu_p(S) equals (q B - p * sum_{i in S} B/deg_S(i)) * |E(S)|
// over the constant q * B * E_max, so subsets compare by exact 128-bit keys.
struct ScanContext {
  const GraphInstance& g;
  long long big_lcm = 1;              // B
  std::vector<long long> b_over_deg;  // B / d for d in [1, n-1]
  long long p = 0, q = 1;

  explicit ScanContext(const GraphInstance& inst) : g(inst) {
    const int n = g.n();
    BigInt b(1);
    for (int d = 1; d < n; ++d) b = lcm(b, BigInt(d));
    if (b > (1ll << 40)) throw SizeError("bruteforce_optimum degree lcm exceeds guard");
    big_lcm = b.convert_to<long long>();
    b_over_deg.assign(n, 0);
    for (int d = 1; d < n; ++d) b_over_deg[d] = big_lcm / d;
    if (num(g.cost) > (1ll << 20) || den(g.cost) > (1ll << 20))
      throw SizeError("bruteforce_optimum cost denominator exceeds guard");
    p = num(g.cost).convert_to<long long>();
    q = den(g.cost).convert_to<long long>();
  }

  // key(S) or nullopt for the -infinity sentinel (isolated selected node)
  bool key_of(ActionSet s, __int128& key_out) const {
    const int n = g.n();
    long long twice_edges = 0;
    __int128 inv_sum = 0;  // sum of B / deg_S(i)
    for (int v = 0; v < n; ++v) {
      if (!set_contains(s, v)) continue;
      const int deg = std::popcount(g.graph.neighbors_mask(v) & s);
      if (deg == 0) return false;
      twice_edges += deg;
      inv_sum += b_over_deg[deg];
    }
    const __int128 left = static_cast<__int128>(q) * big_lcm - static_cast<__int128>(p) * inv_sum;
    key_out = left * (twice_edges / 2);
    return true;
  }
};

}  // namespace

std::pair<NodeSet, Rational> bruteforce_optimum(const GraphInstance& g) {
  const int n = g.n();
  if (n > 22) throw SizeError("bruteforce_optimum guarded to n <= 22");

  const ScanContext ctx(g);
  const std::uint64_t total = std::uint64_t{1} << n;

  struct Best {
    __int128 key = 0;
    int size = 0;
    ActionSet set = 0;
    bool better_than(const Best& o) const {
      if (key != o.key) return key > o.key;
      if (size != o.size) return size < o.size;
      return set < o.set;
    }
  };

  const int workers = worker_count();
  std::vector<Best> best_per_chunk(workers);
  parallel_chunks(
      total,
      [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        Best best;  // mask 0: mu = 0
        for (std::uint64_t s = std::max<std::uint64_t>(begin, 1); s < end; ++s) {
          __int128 key;
          if (!ctx.key_of(s, key)) continue;
          const Best cand{key, std::popcount(s), s};
          if (cand.better_than(best)) best = cand;
        }
        best_per_chunk[chunk] = best;
      },
      workers);

  Best best;
  for (const auto& b : best_per_chunk)
    if (b.better_than(best)) best = b;

  const NodeSet winner = NodeSet::from_mask(n, best.set);
  return {winner, mu_p(g, winner).mu};
}

NodeSet k_core(const Graph& g, const NodeSet& s, int k) {
  if (k < 0) throw ParameterError("k_core requires k >= 0");
  NodeSet cur = s;
  for (int v : k_core_peel_order(g, s, k)) cur.remove(v);
  return cur;
}

std::vector<int> k_core_peel_order(const Graph& g, const NodeSet& s, int k) {
  if (k < 0) throw ParameterError("k_core requires k >= 0");
  NodeSet cur = s;
  std::vector<int> order;
  for (;;) {
    int min_v = -1, min_deg = std::numeric_limits<int>::max();
    for (int v = 0; v < g.n(); ++v) {
      if (!cur.contains(v)) continue;
      const int d = g.degree_in(v, cur);
      if (d < min_deg) {
        min_deg = d;
        min_v = v;
      }
    }
    if (min_v < 0 || min_deg >= k) break;
    order.push_back(min_v);
    cur.remove(min_v);
  }
  return order;
}

Rational relaxed_left(const GraphInstance& g, const NodeSet& s) {
  Rational acc = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (!s.contains(v)) continue;
    acc += g.cost / (g.graph.degree_in(v, s) + 1);
  }
  return Rational(1) - acc;
}

}  // namespace contractlab
