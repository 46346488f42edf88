#include "contractlab/single_agent.hpp"

#include <algorithm>
#include <unordered_set>

#include "contractlab/parallel.hpp"

namespace contractlab {

namespace {

Rational set_cost(ActionSet s, std::span<const Rational> costs) {
  Rational acc = 0;
  for (std::size_t i = 0; i < costs.size(); ++i)
    if (set_contains(s, static_cast<int>(i))) acc += costs[i];
  return acc;
}

void require_positive_costs(std::span<const Rational> costs) {
  for (const auto& c : costs)
    if (c <= 0) throw ParameterError("action costs must be positive");
}

}  // namespace

Rational intersection_contract(ActionSet l, ActionSet r, const Valuation& v,
                               std::span<const Rational> costs) {
  const Rational fl = v.value(l);
  const Rational fr = v.value(r);
  if (fl == fr) throw DegeneratePairError("intersection contract of sets with equal reward");
  return (set_cost(l, costs) - set_cost(r, costs)) / (fl - fr);
}

namespace {

struct BreakpointSearch {
  const Valuation& v;
  std::span<const Rational> costs;
  AgentOracle& oracle;
  std::vector<Breakpoint>& out;
  int depth_guard;

  Rational value(ActionSet s) {
    ++oracle.stats().value_calls;
    return v.value(s);
  }

  // Finds every breakpoint in (kappa_L, kappa_R]. L and R are in demand and
  // f(L) < f(R). One demand query per call; the recursion narrows on the set
  // demanded at the intersection contract of L and R.
  void run(ActionSet l, const Rational& fl, const Rational& cl, ActionSet r, const Rational& fr,
           const Rational& cr, int depth) {
    if (depth > depth_guard)
      throw InternalError("breakpoint recursion exceeded its depth guard; demand oracle broken?");
    const Rational t = (cl - cr) / (fl - fr);
    const ActionSet s = oracle.at(t);
    const Rational fs = value(s);
    if (!(fl < fs && fs <= fr))
      throw InternalError("demanded set at an intersection contract fell outside (f(L), f(R)]");
    if (fs == fr) {
      out.push_back({t, s});
      return;
    }
    const Rational cs = set_cost(s, costs);
    run(l, fl, cl, s, fs, cs, depth + 1);
    run(s, fs, cs, r, fr, cr, depth + 1);
  }
};

}  // namespace

BreakpointCurve breakpoints(const Valuation& v, std::span<const Rational> costs,
                            AgentOracle& oracle) {
  if (static_cast<int>(costs.size()) != v.n())
    throw ParameterError("cost vector size does not match valuation");
  require_positive_costs(costs);

  BreakpointCurve curve;
  curve.points.push_back({Rational(0), kEmptySet});

  const ActionSet right = oracle.at(Rational(1));
  ++oracle.stats().value_calls;
  const Rational fr = v.value(right);
  if (fr.is_zero()) return curve;  // nothing is ever demanded

  BreakpointSearch search{v, costs, oracle, curve.points, 4 * v.n() + 4};
  search.run(kEmptySet, Rational(0), Rational(0), right, fr, set_cost(right, costs), 0);

  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    if (!(curve.points[i - 1].t < curve.points[i].t))
      throw InternalError("breakpoints not strictly increasing");
  }
  return curve;
}

namespace {

// Integer view of one instance: every f(S) and c(S) scaled by one common
// denominator so that contracts become ratios of 64-bit integers and best
// responses compare with 128-bit keys. Guards keep all intermediates exact.
struct ScaledInstance {
  int n;
  std::vector<long long> f;  // f(S) * D
  std::vector<long long> c;  // c(S) * D

  static constexpr long long kMaxF = 1ll << 21;
  static constexpr long long kMaxC = 1ll << 26;

  ScaledInstance(const Valuation& v, std::span<const Rational> costs) : n(v.n()) {
    BigInt d(1);
    const ActionSet all = full_set(n);
    std::vector<Rational> fv(std::size_t{1} << n);
    for (ActionSet s = 0; s <= all; ++s) {
      fv[s] = v.value(s);
      d = lcm(d, den(fv[s]));
    }
    std::vector<Rational> cv(costs.begin(), costs.end());
    for (const auto& x : cv) d = lcm(d, den(x));
    if (d > kMaxF) throw SizeError("denominators too large for the brute-force breakpoint oracle");

    const long long dd = d.convert_to<long long>();
    f.resize(fv.size());
    for (ActionSet s = 0; s <= all; ++s) {
      const BigInt scaled = num(fv[s]) * (dd / den(fv[s]));
      if (scaled < -kMaxF || scaled > kMaxF)
        throw SizeError("reward values too large for the brute-force breakpoint oracle");
      f[s] = scaled.convert_to<long long>();
    }
    c.assign(std::size_t{1} << n, 0);
    std::vector<long long> ci(cv.size());
    for (std::size_t i = 0; i < cv.size(); ++i) {
      const BigInt scaled = num(cv[i]) * (dd / den(cv[i]));
      if (scaled > kMaxC) throw SizeError("costs too large for the brute-force breakpoint oracle");
      ci[i] = scaled.convert_to<long long>();
    }
    for (ActionSet s = 1; s <= all; ++s) {
      const int low = std::countr_zero(s);
      c[s] = c[s & (s - 1)] + ci[static_cast<std::size_t>(low)];
      if (c[s] > kMaxC) throw SizeError("costs too large for the brute-force breakpoint oracle");
    }
  }

  // Best response at contract a/b: maximize a f(S) - b c(S); ties toward
  // larger f, then the smallest bitmask (ascending scan keeps the first).
  // The wide-key variant exists for midpoints of extreme candidates; the
  // narrow one covers the common case and is measurably faster.
  template <typename Key>
  ActionSet best_response_keyed(long long a, long long b) const {
    const ActionSet all = full_set(n);
    ActionSet best = 0;
    Key best_key = 0;
    long long best_f = f[0];
    for (ActionSet s = 1; s <= all; ++s) {
      const Key key = static_cast<Key>(a) * f[s] - static_cast<Key>(b) * c[s];
      if (key > best_key || (key == best_key && f[s] > best_f)) {
        best = s;
        best_key = key;
        best_f = f[s];
      }
    }
    return best;
  }

  bool narrow_keys_ok(long long max_a, long long max_b) const {
    constexpr long long kLimit = 1ll << 62;
    return max_a <= kLimit / (kMaxF + 1) / 2 && max_b <= kLimit / (kMaxC + 1) / 2;
  }

  ActionSet best_response(long long a, long long b, bool narrow) const {
    return narrow ? best_response_keyed<long long>(a, b) : best_response_keyed<__int128>(a, b);
  }
};

struct Fraction {
  long long p, q;  // canonical: q > 0, gcd(|p|, q) = 1
  bool operator==(const Fraction&) const = default;
};

struct FractionHash {
  std::size_t operator()(const Fraction& f) const {
    return std::hash<long long>()(f.p) * 1000003u ^ std::hash<long long>()(f.q);
  }
};

long long llgcd(long long a, long long b) {
  while (b) {
    const long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

bool frac_less(const Fraction& a, const Fraction& b) {
  return static_cast<__int128>(a.p) * b.q < static_cast<__int128>(b.p) * a.q;
}

}  // namespace

BreakpointCurve bruteforce_breakpoints(const Valuation& v, std::span<const Rational> costs) {
  if (v.n() > 12) throw SizeError("bruteforce_breakpoints guarded to n <= 12");
  if (static_cast<int>(costs.size()) != v.n())
    throw ParameterError("cost vector size does not match valuation");
  require_positive_costs(costs);

  const ScaledInstance inst(v, costs);
  const ActionSet all = full_set(inst.n);

  // candidate contracts: intersection contract of every pair with distinct
  // rewards, restricted to [0, 1], plus the endpoints
  std::unordered_set<Fraction, FractionHash> seen;
  std::vector<Fraction> candidates;
  const auto add_candidate = [&](long long p, long long q) {
    const long long g = llgcd(p, q);  // q > 0, so g > 0
    const Fraction fr{p / g, q / g};
    if (seen.insert(fr).second) candidates.push_back(fr);
  };
  add_candidate(0, 1);
  add_candidate(1, 1);
  for (ActionSet a = 0; a <= all; ++a) {
    for (ActionSet b = a + 1; b <= all; ++b) {
      long long dc = inst.c[a] - inst.c[b];
      long long df = inst.f[a] - inst.f[b];
      if (df == 0) continue;
      if (df < 0) {
        df = -df;
        dc = -dc;
      }
      if (dc < 0 || dc > df) continue;  // outside [0, 1]
      add_candidate(dc, df);
    }
  }
  std::sort(candidates.begin(), candidates.end(), frac_less);

  // evaluate the best response at every candidate and at every midpoint
  // between neighbors; evaluations are independent, so they run in parallel
  // and the curve is read off sequentially afterwards. Guards bound
  // candidates by p <= 2^27, q <= 2^22, so midpoints stay inside 64 bits.
  const std::size_t count = candidates.size();
  long long max_a = 1, max_b = 1;
  for (std::size_t i = 0; i < count; ++i) {
    max_a = std::max(max_a, candidates[i].p);
    max_b = std::max(max_b, candidates[i].q);
    if (i + 1 < count) {
      max_a = std::max(max_a, candidates[i].p * candidates[i + 1].q +
                                  candidates[i + 1].p * candidates[i].q);
      max_b = std::max(max_b, 2 * candidates[i].q * candidates[i + 1].q);
    }
  }
  const bool narrow = inst.narrow_keys_ok(max_a, max_b);
  std::vector<ActionSet> at_candidate(count, kEmptySet);
  std::vector<ActionSet> at_midpoint(count, kEmptySet);
  parallel_chunks(count, [&](int, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const auto [p, q] = candidates[i];
      // t = 0 is answered by definition (empty set), not by the sweep
      if (p != 0) at_candidate[i] = inst.best_response(p, q, narrow);
      if (i + 1 < count) {
        const auto [p2, q2] = candidates[i + 1];
        at_midpoint[i] = inst.best_response(p * q2 + p2 * q, 2 * q * q2, narrow);
      }
    }
  });

  BreakpointCurve curve;
  curve.points.push_back({Rational(0), kEmptySet});
  ActionSet prev = kEmptySet;
  for (std::size_t i = 0; i < count; ++i) {
    const auto [p, q] = candidates[i];
    if (p != 0) {
      const ActionSet s = at_candidate[i];
      if (inst.f[s] > inst.f[prev]) {
        curve.points.push_back({make_rational(p, q), s});
        prev = s;
      } else if (inst.f[s] < inst.f[prev]) {
        throw InternalError("brute-force sweep saw the reward in demand decrease");
      }
    }
    // between consecutive candidates nothing may change
    if (i + 1 < count && at_midpoint[i] != prev)
      throw InternalError("demand changed between adjacent candidate contracts");
  }
  return curve;
}

ContractChoice optimal_contract(const BreakpointCurve& curve, const Valuation& v) {
  if (curve.points.empty()) throw ParameterError("empty breakpoint curve");
  ContractChoice best{curve.points.front().t, curve.points.front().set, Rational(0)};
  best.utility = (Rational(1) - best.t) * v.value(best.set);
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    const auto& bp = curve.points[i];
    Rational u = (Rational(1) - bp.t) * v.value(bp.set);
    if (u > best.utility) best = {bp.t, bp.set, std::move(u)};
  }
  return best;
}

bool verify_nested_chain(const BreakpointCurve& curve, int n) {
  if (curve.points.size() > static_cast<std::size_t>(n) + 1) return false;
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    const ActionSet a = curve.points[i - 1].set;
    const ActionSet b = curve.points[i].set;
    if (!(is_subset(a, b) && a != b)) return false;
  }
  return true;
}

}  // namespace contractlab
