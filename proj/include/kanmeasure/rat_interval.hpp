#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ext_value.hpp"

namespace kanmeasure {

/// Element of the interval algebra on the rationals: a finite disjoint union
/// of half-open pieces (lo, hi] with optional infinite ends, kept sorted and
/// merged. Every nonempty element is an infinite subset of the rationals,
/// which is the load-bearing fact for the one-sided extension failure.
class RatIntervalSet {
 public:
  struct Piece {
    std::optional<Rational> lo;  // open lower end; nullopt = -infinity
    std::optional<Rational> hi;  // closed upper end; nullopt = +infinity
  };

  RatIntervalSet() = default;  // empty

  static RatIntervalSet interval(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) return RatIntervalSet();
    return RatIntervalSet({Piece{lo, hi}});
  }
  static RatIntervalSet ray_below(const Rational& hi) { return RatIntervalSet({Piece{{}, hi}}); }
  static RatIntervalSet ray_above(const Rational& lo) { return RatIntervalSet({Piece{lo, {}}}); }
  static RatIntervalSet all() { return RatIntervalSet({Piece{{}, {}}}); }

  bool is_empty() const { return pieces_.empty(); }
  const std::vector<Piece>& pieces() const { return pieces_; }

  bool contains(const Rational& q) const {
    for (const auto& p : pieces_)
      if ((!p.lo || *p.lo < q) && (!p.hi || q <= *p.hi)) return true;
    return false;
  }

  RatIntervalSet complement() const {
    std::vector<Piece> out;
    std::optional<Rational> cursor;  // complement covered up to here (open end)
    bool at_minus_infinity = true;
    for (const auto& p : pieces_) {
      if (p.lo) {
        if (at_minus_infinity)
          out.push_back(Piece{{}, *p.lo});
        else
          out.push_back(Piece{*cursor, *p.lo});
      }
      at_minus_infinity = false;
      cursor = p.hi;
      if (!p.hi) return RatIntervalSet(std::move(out));  // reached +infinity
    }
    if (at_minus_infinity) return all();
    out.push_back(Piece{*cursor, {}});
    return RatIntervalSet(std::move(out));
  }

  friend RatIntervalSet set_union(const RatIntervalSet& a, const RatIntervalSet& b) {
    std::vector<Piece> all = a.pieces_;
    all.insert(all.end(), b.pieces_.begin(), b.pieces_.end());
    return RatIntervalSet(std::move(all));
  }
  friend RatIntervalSet set_intersection(const RatIntervalSet& a, const RatIntervalSet& b) {
    return set_union(a.complement(), b.complement()).complement();
  }
  friend RatIntervalSet set_difference(const RatIntervalSet& a, const RatIntervalSet& b) {
    return set_intersection(a, b.complement());
  }
  friend bool disjoint(const RatIntervalSet& a, const RatIntervalSet& b) {
    return set_intersection(a, b).is_empty();
  }
  friend bool operator==(const RatIntervalSet& a, const RatIntervalSet& b) {
    return a.render() == b.render();
  }

  std::string render() const {
    if (pieces_.empty()) return "{}";
    std::string s;
    for (const auto& p : pieces_) {
      if (!s.empty()) s += " u ";
      s += "(" + (p.lo ? rational_str(*p.lo) : "-oo");
      s += ",";
      s += (p.hi ? rational_str(*p.hi) : "oo");
      s += p.hi ? "]" : ")";
    }
    return s;
  }

 private:
  static std::string rational_str(const Rational& r) {
    std::string n = numerator(r).str();
    if (denominator(r) == 1) return n;
    return n + "/" + denominator(r).str();
  }

  explicit RatIntervalSet(std::vector<Piece> pieces) : pieces_(std::move(pieces)) { normalize(); }

  static bool lo_less(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return bool(b);
    if (!b) return false;
    return *a < *b;
  }

  void normalize() {
    std::vector<Piece> ps;
    for (auto& p : pieces_)
      if (!p.lo || !p.hi || *p.lo < *p.hi) ps.push_back(p);
    std::sort(ps.begin(), ps.end(), [](const Piece& a, const Piece& b) { return lo_less(a.lo, b.lo); });
    pieces_.clear();
    for (auto& p : ps) {
      if (!pieces_.empty()) {
        Piece& last = pieces_.back();
        // overlap or touching: (x, m] u (m', y] merges when m' <= m
        bool touches = !last.hi || !p.lo || !(*last.hi < *p.lo);
        if (touches) {
          if (last.hi && (!p.hi || *last.hi < *p.hi)) last.hi = p.hi;
          if (!p.hi) last.hi = {};
          continue;
        }
      }
      pieces_.push_back(p);
    }
  }

  std::vector<Piece> pieces_;
};

}  // namespace kanmeasure
