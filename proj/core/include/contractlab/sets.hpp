#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "contractlab/errors.hpp"

namespace contractlab {

/// Subset of a ground set [n] with n <= 63, as a plain bitmask.
/// Action/node i corresponds to bit (1 << i). Used on all brute-force paths.
using ActionSet = std::uint64_t;

inline constexpr ActionSet kEmptySet = 0;

inline ActionSet full_set(int n) {
  return n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
}
inline ActionSet singleton(int i) { return std::uint64_t{1} << i; }
inline bool set_contains(ActionSet s, int i) { return (s >> i) & 1u; }
inline int set_size(ActionSet s) { return std::popcount(s); }
inline bool is_subset(ActionSet a, ActionSet b) { return (a & ~b) == 0; }

/// "{0,2,5}" rendering, mostly for diagnostics and reports.
std::string set_to_string(ActionSet s);

/// Subset of an arbitrary-size node ground set, packed 64 nodes per word.
/// The multi-agent side works with these since PTAS instances exceed 63 nodes.
class NodeSet {
 public:
  NodeSet() : n_(0) {}
  explicit NodeSet(int n) : n_(n), words_((n + 63) / 64, 0) {}
  static NodeSet from_mask(int n, ActionSet mask);
  static NodeSet full(int n);

  int ground_size() const { return n_; }
  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void add(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void remove(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const;
  bool empty() const;

  bool is_subset_of(const NodeSet& other) const;
  NodeSet operator|(const NodeSet& o) const;
  NodeSet operator&(const NodeSet& o) const;
  NodeSet minus(const NodeSet& o) const;
  bool operator==(const NodeSet& o) const = default;

  /// Numeric order of the bitmask seen as one big integer (node 0 = LSB).
  /// This is the tie-breaking order used everywhere "lexicographic" appears.
  static bool mask_less(const NodeSet& a, const NodeSet& b);

  std::vector<int> to_indices() const;
  ActionSet to_mask() const;  // requires ground_size() <= 63
  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace contractlab
