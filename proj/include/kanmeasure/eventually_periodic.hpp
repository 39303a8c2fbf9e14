#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cofin_set.hpp"

namespace kanmeasure {

/// Subset of the naturals given by explicit prefix bits and a repeating
/// pattern from the prefix end onward. Closed under complement and the
/// binary boolean operations (periods combine by lcm); every finite-cofinite
/// set embeds. This is the representable fragment on which extensions beyond
/// the algebra are evaluated.
class EventuallyPeriodicSet {
 public:
  static constexpr std::size_t kMaxPeriod = 1 << 16;

  EventuallyPeriodicSet() : pattern_{false} {}

  EventuallyPeriodicSet(std::vector<bool> prefix, std::vector<bool> pattern)
      : prefix_(std::move(prefix)), pattern_(std::move(pattern)) {
    if (pattern_.empty()) throw std::invalid_argument("eventually periodic set: empty pattern");
    if (pattern_.size() > kMaxPeriod)
      throw std::invalid_argument("eventually periodic set: period too large");
  }

  static EventuallyPeriodicSet empty() { return EventuallyPeriodicSet({}, {false}); }
  static EventuallyPeriodicSet naturals() { return EventuallyPeriodicSet({}, {true}); }

  /// Arithmetic progression {n : n >= offset, n = offset (mod period)}.
  static EventuallyPeriodicSet residue_class(std::uint64_t offset, std::size_t period) {
    std::vector<bool> prefix(offset, false);
    std::vector<bool> pattern(period, false);
    pattern[0] = true;
    return EventuallyPeriodicSet(std::move(prefix), std::move(pattern));
  }

  static EventuallyPeriodicSet from_cofin(const CofinSet& c) {
    std::uint64_t bound = c.support().empty() ? 0 : c.support().back() + 1;
    std::vector<bool> prefix(bound);
    for (std::uint64_t n = 0; n < bound; ++n) prefix[n] = c.contains(n);
    return EventuallyPeriodicSet(std::move(prefix), {c.is_cofinite()});
  }

  std::size_t prefix_length() const { return prefix_.size(); }
  std::size_t period() const { return pattern_.size(); }
  const std::vector<bool>& prefix() const { return prefix_; }
  const std::vector<bool>& pattern() const { return pattern_; }

  bool contains(std::uint64_t n) const {
    if (n < prefix_.size()) return prefix_[n];
    return pattern_[std::size_t((n - prefix_.size()) % pattern_.size())];
  }

  bool tail_empty() const {
    for (bool b : pattern_)
      if (b) return false;
    return true;
  }
  bool tail_full() const {
    for (bool b : pattern_)
      if (!b) return false;
    return true;
  }
  bool is_empty() const {
    if (!tail_empty()) return false;
    for (bool b : prefix_)
      if (b) return false;
    return true;
  }
  bool is_finite() const { return tail_empty(); }
  bool is_cofinite() const { return tail_full(); }

  /// The finite-cofinite form, when the set lies in the algebra.
  CofinSet to_cofin() const {
    if (!is_finite() && !is_cofinite())
      throw std::domain_error("set is not finite or cofinite");
    std::vector<std::uint64_t> side;
    for (std::uint64_t n = 0; n < prefix_.size(); ++n)
      if (prefix_[n] == is_finite()) side.push_back(n);
    return is_finite() ? CofinSet::finite(std::move(side)) : CofinSet::cofinite(std::move(side));
  }

  EventuallyPeriodicSet complement() const {
    std::vector<bool> p(prefix_), q(pattern_);
    p.flip();
    q.flip();
    return EventuallyPeriodicSet(std::move(p), std::move(q));
  }

  /// Rebuild with a longer prefix and a period multiple, preserving the set.
  EventuallyPeriodicSet aligned(std::size_t prefix_len, std::size_t period_len) const {
    if (prefix_len < prefix_.size() || period_len % pattern_.size() != 0)
      throw std::invalid_argument("aligned: not a refinement");
    std::vector<bool> p(prefix_len), q(period_len);
    for (std::uint64_t n = 0; n < prefix_len; ++n) p[n] = contains(n);
    for (std::size_t k = 0; k < period_len; ++k) q[k] = contains(prefix_len + k);
    return EventuallyPeriodicSet(std::move(p), std::move(q));
  }

  template <class Op>
  friend EventuallyPeriodicSet combine(const EventuallyPeriodicSet& a,
                                       const EventuallyPeriodicSet& b, Op&& op) {
    std::size_t prefix_len = std::max(a.prefix_.size(), b.prefix_.size());
    std::size_t period_len = std::lcm(a.pattern_.size(), b.pattern_.size());
    if (period_len > kMaxPeriod)
      throw std::invalid_argument("combine: joint period too large");
    EventuallyPeriodicSet ax = a.aligned(prefix_len, period_len);
    EventuallyPeriodicSet bx = b.aligned(prefix_len, period_len);
    std::vector<bool> p(prefix_len), q(period_len);
    for (std::size_t n = 0; n < prefix_len; ++n) p[n] = op(ax.prefix_[n], bx.prefix_[n]);
    for (std::size_t k = 0; k < period_len; ++k) q[k] = op(ax.pattern_[k], bx.pattern_[k]);
    return EventuallyPeriodicSet(std::move(p), std::move(q));
  }

  friend EventuallyPeriodicSet set_union(const EventuallyPeriodicSet& a,
                                         const EventuallyPeriodicSet& b) {
    return combine(a, b, [](bool x, bool y) { return x || y; });
  }
  friend EventuallyPeriodicSet set_intersection(const EventuallyPeriodicSet& a,
                                                const EventuallyPeriodicSet& b) {
    return combine(a, b, [](bool x, bool y) { return x && y; });
  }
  friend EventuallyPeriodicSet set_difference(const EventuallyPeriodicSet& a,
                                              const EventuallyPeriodicSet& b) {
    return combine(a, b, [](bool x, bool y) { return x && !y; });
  }
  friend EventuallyPeriodicSet symmetric_difference(const EventuallyPeriodicSet& a,
                                                    const EventuallyPeriodicSet& b) {
    return combine(a, b, [](bool x, bool y) { return x != y; });
  }

  bool subset_of(const EventuallyPeriodicSet& o) const {
    return set_difference(*this, o).is_empty();
  }

  /// Semantic equality: agreement after aligning prefix and period.
  friend bool operator==(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b) {
    return symmetric_difference(a, b).is_empty();
  }

  std::string to_string() const {
    std::string s = "\"";
    for (bool b : prefix_) s += b ? '1' : '0';
    s += "\"+(";
    for (bool b : pattern_) s += b ? '1' : '0';
    return s + ")*";
  }

 private:
  std::vector<bool> prefix_;   // membership below prefix_.size()
  std::vector<bool> pattern_;  // cyclic membership from prefix_.size() on
};

}  // namespace kanmeasure
