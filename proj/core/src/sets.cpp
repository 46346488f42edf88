#include "contractlab/sets.hpp"

namespace contractlab {

std::string set_to_string(ActionSet s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i) {
    if (!set_contains(s, i)) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  out += "}";
  return out;
}

NodeSet NodeSet::from_mask(int n, ActionSet mask) {
  if (n > 63) throw SizeError("from_mask requires n <= 63");
  NodeSet s(n);
  if (n > 0) s.words_[0] = mask & full_set(n);
  return s;
}

NodeSet NodeSet::full(int n) {
  NodeSet s(n);
  for (int v = 0; v < n; ++v) s.add(v);
  return s;
}

int NodeSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool NodeSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

NodeSet NodeSet::operator|(const NodeSet& o) const {
  NodeSet r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
  return r;
}

NodeSet NodeSet::operator&(const NodeSet& o) const {
  NodeSet r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
  return r;
}

NodeSet NodeSet::minus(const NodeSet& o) const {
  NodeSet r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
  return r;
}

bool NodeSet::mask_less(const NodeSet& a, const NodeSet& b) {
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  }
  return false;
}

std::vector<int> NodeSet::to_indices() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

ActionSet NodeSet::to_mask() const {
  if (n_ > 63) throw SizeError("to_mask requires n <= 63");
  return words_.empty() ? 0 : words_[0];
}

std::string NodeSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : to_indices()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace contractlab
