#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace kanmeasure {

/// Element of the finite-cofinite algebra on the naturals: a sorted finite
/// index set, either the set itself or its complement.
class CofinSet {
 public:
  CofinSet() = default;  // the empty set

  static CofinSet finite(std::vector<std::uint64_t> s) { return CofinSet(false, std::move(s)); }
  /// The complement of a finite set.
  static CofinSet cofinite(std::vector<std::uint64_t> complement_of) {
    return CofinSet(true, std::move(complement_of));
  }
  static CofinSet naturals() { return cofinite({}); }

  bool is_cofinite() const { return cofinite_; }
  bool is_empty() const { return !cofinite_ && s_.empty(); }
  /// The finite side: the set itself, or the complement when cofinite.
  const std::vector<std::uint64_t>& support() const { return s_; }

  bool contains(std::uint64_t n) const {
    bool in = std::binary_search(s_.begin(), s_.end(), n);
    return cofinite_ ? !in : in;
  }

  CofinSet complement() const { return CofinSet(!cofinite_, s_); }

  friend CofinSet set_union(const CofinSet& a, const CofinSet& b) {
    if (!a.cofinite_ && !b.cofinite_) return CofinSet(false, merge(a.s_, b.s_));
    if (a.cofinite_ && b.cofinite_) return CofinSet(true, intersect(a.s_, b.s_));
    const CofinSet& fin = a.cofinite_ ? b : a;
    const CofinSet& cof = a.cofinite_ ? a : b;
    return CofinSet(true, subtract(cof.s_, fin.s_));
  }
  friend CofinSet set_intersection(const CofinSet& a, const CofinSet& b) {
    return set_union(a.complement(), b.complement()).complement();
  }
  friend CofinSet set_difference(const CofinSet& a, const CofinSet& b) {
    return set_intersection(a, b.complement());
  }
  friend CofinSet symmetric_difference(const CofinSet& a, const CofinSet& b) {
    return set_union(set_difference(a, b), set_difference(b, a));
  }
  friend bool operator==(const CofinSet& a, const CofinSet& b) {
    return a.cofinite_ == b.cofinite_ && a.s_ == b.s_;
  }

  std::string to_string() const {
    std::string body = "{";
    for (std::size_t i = 0; i < s_.size(); ++i) body += (i ? "," : "") + std::to_string(s_[i]);
    body += "}";
    return cofinite_ ? "N\\" + body : body;
  }

 private:
  CofinSet(bool cofinite, std::vector<std::uint64_t> s) : cofinite_(cofinite), s_(std::move(s)) {
    std::sort(s_.begin(), s_.end());
    s_.erase(std::unique(s_.begin(), s_.end()), s_.end());
  }

  static std::vector<std::uint64_t> merge(const std::vector<std::uint64_t>& a,
                                          const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  static std::vector<std::uint64_t> intersect(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  static std::vector<std::uint64_t> subtract(const std::vector<std::uint64_t>& a,
                                             const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  bool cofinite_ = false;
  std::vector<std::uint64_t> s_;
};

}  // namespace kanmeasure
