#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kanmeasure {

/// Finite preorder on elements 0..size-1: a reflexive, transitive relation.
/// Coend categories and comma objects live here; posets add antisymmetry.
class FinitePreorder {
 public:
  FinitePreorder() = default;
  virtual ~FinitePreorder() = default;

  FinitePreorder(std::vector<std::string> names, std::vector<std::vector<char>> leq)
      : names_(std::move(names)), leq_(std::move(leq)) {
    const std::size_t n = names_.size();
    if (leq_.size() != n) throw std::invalid_argument("preorder: relation size mismatch");
    for (auto& row : leq_)
      if (row.size() != n) throw std::invalid_argument("preorder: relation size mismatch");
    for (std::size_t i = 0; i < n; ++i)
      if (!leq_[i][i]) throw std::invalid_argument("preorder: not reflexive");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq_[i][j])
          for (std::size_t k = 0; k < n; ++k)
            if (leq_[j][k] && !leq_[i][k]) throw std::invalid_argument("preorder: not transitive");
  }

  /// Builds the reflexive-transitive closure of an arbitrary relation.
  static FinitePreorder from_generating_relation(std::size_t n,
                                                 const std::vector<std::pair<int, int>>& rel,
                                                 std::vector<std::string> names = {}) {
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = 1;
    for (auto [a, b] : rel) leq.at(a).at(b) = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq[k][j]) leq[i][j] = 1;
    if (names.empty()) {
      names.resize(n);
      for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
    }
    return FinitePreorder(std::move(names), std::move(leq));
  }

  std::size_t size() const { return names_.size(); }
  bool leq(int a, int b) const { return leq_[a][b]; }
  bool equiv(int a, int b) const { return leq_[a][b] && leq_[b][a]; }
  const std::string& name(int a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }

  /// Indices sorted so that strictly-below elements come first.
  std::vector<int> linear_extension() const {
    std::vector<int> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> below(size(), 0);
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (leq_[j][i] && !leq_[i][j]) ++below[i];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return below[a] < below[b]; });
    return order;
  }

 protected:
  std::vector<std::string> names_;
  std::vector<std::vector<char>> leq_;
};

/// Finite poset: antisymmetric preorder.
class FinitePoset : public FinitePreorder {
 public:
  FinitePoset() = default;

  FinitePoset(std::vector<std::string> names, std::vector<std::vector<char>> leq)
      : FinitePreorder(std::move(names), std::move(leq)) {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (leq_[i][j] && leq_[j][i]) throw std::invalid_argument("poset: not antisymmetric");
  }

  static FinitePoset from_covers(std::size_t n, const std::vector<std::pair<int, int>>& covers,
                                 std::vector<std::string> names = {}) {
    FinitePreorder p = FinitePreorder::from_generating_relation(n, covers, std::move(names));
    std::vector<std::vector<char>> leq(n);
    for (std::size_t i = 0; i < n; ++i) {
      leq[i].resize(n);
      for (std::size_t j = 0; j < n; ++j) leq[i][j] = p.leq(i, j);
    }
    return FinitePoset(p.names(), std::move(leq));
  }

  static FinitePoset chain(std::size_t n) {
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(int(i), int(i + 1));
    return from_covers(n, covers);
  }

  static FinitePoset antichain(std::size_t n) { return from_covers(n, {}); }

  /// {bottom < a, b < top} with a, b incomparable.
  static FinitePoset diamond() {
    return from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"bot", "a", "b", "top"});
  }
};

/// Finite lattice: poset with total join/meet tables, top and bottom.
/// Construction fails when some pair lacks a least upper / greatest lower bound.
class FiniteLattice : public FinitePoset {
 public:
  FiniteLattice() = default;

  explicit FiniteLattice(FinitePoset p) : FinitePoset(std::move(p)) {
    const std::size_t n = size();
    if (n == 0) throw std::invalid_argument("lattice: empty carrier");
    join_.assign(n, std::vector<int>(n, -1));
    meet_.assign(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        join_[i][j] = bound_of(int(i), int(j), /*upper=*/true);
        meet_[i][j] = bound_of(int(i), int(j), /*upper=*/false);
        if (join_[i][j] < 0 || meet_[i][j] < 0)
          throw std::invalid_argument("lattice: pair without lub/glb: " + name(int(i)) + "," +
                                      name(int(j)));
      }
    bottom_ = 0;
    top_ = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bottom_ = meet_[bottom_][i];
      top_ = join_[top_][i];
    }
  }

  int join(int a, int b) const { return join_[a][b]; }
  int meet(int a, int b) const { return meet_[a][b]; }
  int top() const { return top_; }
  int bottom() const { return bottom_; }

  /// Least upper bound of a subset; the empty join is the bottom.
  int join_of(const std::vector<int>& s) const {
    int acc = bottom_;
    for (int x : s) acc = join(acc, check_index(x));
    return acc;
  }
  /// Greatest lower bound of a subset; the empty meet is the top.
  int meet_of(const std::vector<int>& s) const {
    int acc = top_;
    for (int x : s) acc = meet(acc, check_index(x));
    return acc;
  }

  static FiniteLattice chain(std::size_t n) { return FiniteLattice(FinitePoset::chain(n)); }
  static FiniteLattice diamond() { return FiniteLattice(FinitePoset::diamond()); }

  /// Boolean lattice of subsets of {0..k-1}, element i = bitmask i.
  static FiniteLattice powerset(std::size_t k) {
    const std::size_t n = std::size_t(1) << k;
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) {
      names[i] = "s" + std::to_string(i);
      for (std::size_t j = 0; j < n; ++j) leq[i][j] = (i & j) == i;
    }
    return FiniteLattice(FinitePoset(std::move(names), std::move(leq)));
  }

 private:
  int check_index(int x) const {
    if (x < 0 || std::size_t(x) >= size()) throw std::out_of_range("lattice: element not in carrier");
    return x;
  }

  int bound_of(int a, int b, bool upper) const {
    std::vector<int> cands;
    for (std::size_t k = 0; k < size(); ++k) {
      bool ok = upper ? (leq_[a][k] && leq_[b][k]) : (leq_[k][a] && leq_[k][b]);
      if (ok) cands.push_back(int(k));
    }
    for (int c : cands) {
      bool extreme = true;
      for (int d : cands)
        if (upper ? !leq_[c][d] : !leq_[d][c]) extreme = false;
      if (extreme) return c;
    }
    return -1;
  }

  std::vector<std::vector<int>> join_, meet_;
  int top_ = 0, bottom_ = 0;
};

using PosetPtr = std::shared_ptr<const FinitePoset>;
using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// Order-preserving map between finite preorders, stored as a total table.
/// The table is validated against both orders on construction.
class MonotoneMap {
 public:
  MonotoneMap() = default;

  MonotoneMap(std::shared_ptr<const FinitePreorder> src, std::shared_ptr<const FinitePreorder> dst,
              std::vector<int> table)
      : src_(std::move(src)), dst_(std::move(dst)), table_(std::move(table)) {
    if (table_.size() != src_->size()) throw std::invalid_argument("monotone map: table size mismatch");
    for (int v : table_)
      if (v < 0 || std::size_t(v) >= dst_->size())
        throw std::invalid_argument("monotone map: value out of range");
    for (std::size_t i = 0; i < src_->size(); ++i)
      for (std::size_t j = 0; j < src_->size(); ++j)
        if (src_->leq(int(i), int(j)) && !dst_->leq(table_[i], table_[j]))
          throw std::invalid_argument("monotone map: table violates monotonicity at " +
                                      src_->name(int(i)) + " <= " + src_->name(int(j)));
  }

  static MonotoneMap identity(std::shared_ptr<const FinitePreorder> p) {
    std::vector<int> t(p->size());
    std::iota(t.begin(), t.end(), 0);
    return MonotoneMap(p, p, std::move(t));
  }

  int operator()(int x) const { return table_.at(x); }
  const std::vector<int>& table() const { return table_; }
  const std::shared_ptr<const FinitePreorder>& source() const { return src_; }
  const std::shared_ptr<const FinitePreorder>& target() const { return dst_; }

  friend MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
    std::vector<int> t(f.table_.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.table_.at(f.table_[i]);
    return MonotoneMap(f.src_, g.dst_, std::move(t));
  }

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) { return a.table_ == b.table_; }

  /// Pointwise comparison against another map with the same shape.
  bool pointwise_leq(const MonotoneMap& o) const {
    for (std::size_t i = 0; i < table_.size(); ++i)
      if (!dst_->leq(table_[i], o.table_[i])) return false;
    return true;
  }

 private:
  std::shared_ptr<const FinitePreorder> src_, dst_;
  std::vector<int> table_;
};

inline int lattice_join(const FiniteLattice& l, const std::vector<int>& s) { return l.join_of(s); }
inline int lattice_meet(const FiniteLattice& l, const std::vector<int>& s) { return l.meet_of(s); }

namespace detail {
inline void for_each_subset(std::size_t n, const std::function<void(const std::vector<int>&)>& fn) {
  if (n > 20) throw std::invalid_argument("subset enumeration: carrier too large");
  std::vector<int> subset;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t(1) << i)) subset.push_back(int(i));
    fn(subset);
  }
}
}  // namespace detail

/// Exhaustive check that f(join S) = join f(S) for every subset S of the source.
inline bool preserves_joins(const MonotoneMap& f, const FiniteLattice& src, const FiniteLattice& dst) {
  bool ok = true;
  detail::for_each_subset(src.size(), [&](const std::vector<int>& s) {
    if (!ok) return;
    std::vector<int> image;
    image.reserve(s.size());
    for (int x : s) image.push_back(f(x));
    if (f(src.join_of(s)) != dst.join_of(image)) ok = false;
  });
  return ok;
}

inline bool preserves_meets(const MonotoneMap& f, const FiniteLattice& src, const FiniteLattice& dst) {
  bool ok = true;
  detail::for_each_subset(src.size(), [&](const std::vector<int>& s) {
    if (!ok) return;
    std::vector<int> image;
    image.reserve(s.size());
    for (int x : s) image.push_back(f(x));
    if (f(src.meet_of(s)) != dst.meet_of(image)) ok = false;
  });
  return ok;
}

/// All monotone tables src -> dst, in lexicographic order along a linear
/// extension of the source. Throws when the count would exceed `limit`.
inline std::vector<std::vector<int>> enumerate_monotone_tables(const FinitePreorder& src,
                                                               const FinitePreorder& dst,
                                                               std::size_t limit = 2'000'000) {
  std::vector<int> order = src.linear_extension();
  std::vector<std::vector<int>> out;
  std::vector<int> table(src.size(), -1);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == order.size()) {
      out.push_back(table);
      if (out.size() > limit) throw std::length_error("monotone map enumeration limit exceeded");
      return;
    }
    int x = order[pos];
    for (std::size_t v = 0; v < dst.size(); ++v) {
      bool ok = true;
      for (std::size_t p = 0; p < pos && ok; ++p) {
        int y = order[p];
        if (src.leq(y, x) && !dst.leq(table[y], int(v))) ok = false;
        if (src.leq(x, y) && !dst.leq(int(v), table[y])) ok = false;
      }
      if (!ok) continue;
      table[x] = int(v);
      rec(pos + 1);
    }
    table[x] = -1;
  };
  if (src.size() == 0)
    out.push_back({});
  else
    rec(0);
  return out;
}

}  // namespace kanmeasure
