#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kanmeasure {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact value object for all measures: a nonnegative rational or +infinity.
/// Infinity is absorbing under addition and strictly above every rational.
/// Subtraction is intentionally not provided.
class ExtValue {
 public:
  ExtValue() : infinite_(false), value_(0) {}

  ExtValue(const Rational& v) : infinite_(false), value_(v) {
    if (v < 0) throw std::invalid_argument("ExtValue: negative rational");
  }
  ExtValue(long v) : ExtValue(Rational(v)) {}
  ExtValue(long num, long den) : ExtValue(Rational(num, den)) {}

  static ExtValue infinity() {
    ExtValue v;
    v.infinite_ = true;
    return v;
  }

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0; }

  /// The finite value; only valid when !is_infinite().
  const Rational& rational() const {
    if (infinite_) throw std::domain_error("ExtValue: rational() on infinity");
    return value_;
  }

  friend ExtValue operator+(const ExtValue& a, const ExtValue& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtValue(a.value_ + b.value_);
  }
  ExtValue& operator+=(const ExtValue& o) { return *this = *this + o; }

  friend bool operator==(const ExtValue& a, const ExtValue& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtValue& a, const ExtValue& b) { return !(a == b); }
  friend bool operator<(const ExtValue& a, const ExtValue& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtValue& a, const ExtValue& b) { return a == b || a < b; }
  friend bool operator>(const ExtValue& a, const ExtValue& b) { return b < a; }
  friend bool operator>=(const ExtValue& a, const ExtValue& b) { return b <= a; }

  friend ExtValue min(const ExtValue& a, const ExtValue& b) { return a <= b ? a : b; }
  friend ExtValue max(const ExtValue& a, const ExtValue& b) { return a <= b ? b : a; }

  /// Canonical rendering: "inf", "p" when integral, else "p/q".
  std::string to_string() const {
    if (infinite_) return "inf";
    std::string n = numerator(value_).str();
    if (denominator(value_) == 1) return n;
    return n + "/" + denominator(value_).str();
  }

 private:
  bool infinite_;
  Rational value_;
};

inline ExtValue ext_add(const ExtValue& a, const ExtValue& b) { return a + b; }

/// Strict parse of a nonnegative rational literal "p" or "p/q".
/// Floating point notation is rejected.
inline Rational parse_rational(std::string_view s) {
  auto is_digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_digits(s)) throw std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
    return Rational(Integer(std::string(s)));
  }
  std::string_view num = s.substr(0, slash);
  std::string_view den = s.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
  Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
  return Rational(Integer(std::string(num)), d);
}

inline ExtValue parse_ext_value(std::string_view s) {
  if (s == "inf") return ExtValue::infinity();
  return ExtValue(parse_rational(s));
}

inline Rational rational_pow(const Rational& r, unsigned long e) {
  using boost::multiprecision::pow;
  return Rational(pow(numerator(r), static_cast<unsigned>(e)),
                  pow(denominator(r), static_cast<unsigned>(e)));
}

/// Exact value of the series sum_{k>=0} c * r^(offset + k*period)
/// for 0 <= r < 1, c >= 0: c * r^offset / (1 - r^period).
inline ExtValue geometric_tail_sum(const Rational& c, const Rational& r, unsigned long period,
                                   unsigned long offset) {
  if (c < 0) throw std::invalid_argument("geometric_tail_sum: negative coefficient");
  if (r < 0) throw std::invalid_argument("geometric_tail_sum: negative ratio");
  if (r >= 1) throw std::invalid_argument("geometric_tail_sum: ratio must be < 1");
  if (period == 0) throw std::invalid_argument("geometric_tail_sum: period must be positive");
  return ExtValue(c * rational_pow(r, offset) / (1 - rational_pow(r, period)));
}

}  // namespace kanmeasure
