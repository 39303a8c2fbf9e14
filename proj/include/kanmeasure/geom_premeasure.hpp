#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eventually_periodic.hpp"
#include "ext_value.hpp"

namespace kanmeasure {

/// Premeasure on the finite-cofinite algebra over the naturals with exactly
/// summable weights: finitely many override weights followed by a zero or
/// geometric tail w_n = c*r^n. Sigma-additivity inside the algebra forces
/// the cofinite values to be total-minus-finite, which stays exact because
/// the total mass is a closed-form rational. The all_infinite flag replaces
/// the weights by the premeasure that is infinite on every nonempty element.
class GeomWeightPremeasure {
 public:
  struct GeometricTail {
    Rational coefficient;  // c >= 0
    Rational ratio;        // 0 <= r < 1
  };

  GeomWeightPremeasure() = default;

  static GeomWeightPremeasure with_zero_tail(std::vector<Rational> overrides) {
    return GeomWeightPremeasure(std::move(overrides), std::nullopt, false);
  }
  static GeomWeightPremeasure with_geometric_tail(std::vector<Rational> overrides, Rational c,
                                                  Rational r) {
    return GeomWeightPremeasure(std::move(overrides), GeometricTail{std::move(c), std::move(r)},
                                false);
  }
  static GeomWeightPremeasure all_infinite() { return GeomWeightPremeasure({}, std::nullopt, true); }

  /// w_n = (1/2)^(n+1): total mass exactly 1.
  static GeomWeightPremeasure half_weights() {
    return with_geometric_tail({}, Rational(1, 2), Rational(1, 2));
  }

  bool is_all_infinite() const { return infinite_; }
  const std::vector<Rational>& overrides() const { return overrides_; }
  const std::optional<GeometricTail>& tail() const { return tail_; }

  Rational weight(std::uint64_t n) const {
    if (infinite_) throw std::domain_error("all-infinite premeasure has no weights");
    if (n < overrides_.size()) return overrides_[n];
    if (!tail_) return 0;
    return tail_->coefficient * rational_pow(tail_->ratio, static_cast<unsigned long>(n));
  }

  ExtValue total_mass() const {
    if (infinite_) return ExtValue::infinity();
    Rational total = 0;
    for (const Rational& w : overrides_) total += w;
    if (tail_)
      total += geometric_tail_sum(tail_->coefficient, tail_->ratio, 1, overrides_.size())
                   .rational();
    return ExtValue(total);
  }

  /// Mass of [from, infinity).
  ExtValue tail_mass(std::uint64_t from) const {
    if (infinite_) return ExtValue::infinity();
    Rational total = 0;
    for (std::uint64_t n = from; n < overrides_.size(); ++n) total += overrides_[n];
    if (tail_) {
      std::uint64_t start = std::max<std::uint64_t>(from, overrides_.size());
      total += geometric_tail_sum(tail_->coefficient, tail_->ratio, 1, start).rational();
    }
    return ExtValue(total);
  }

 private:
  GeomWeightPremeasure(std::vector<Rational> overrides, std::optional<GeometricTail> tail,
                       bool infinite)
      : overrides_(std::move(overrides)), tail_(std::move(tail)), infinite_(infinite) {
    for (const Rational& w : overrides_)
      if (w < 0) throw std::invalid_argument("weights must be nonnegative");
    if (tail_) {
      if (tail_->coefficient < 0) throw std::invalid_argument("tail coefficient must be >= 0");
      if (tail_->ratio < 0 || tail_->ratio >= 1)
        throw std::invalid_argument("tail ratio must lie in [0,1)");
    }
  }

  std::vector<Rational> overrides_;
  std::optional<GeometricTail> tail_;
  bool infinite_ = false;
};

/// Exact value on a finite-cofinite algebra element.
inline ExtValue premeasure_eval(const GeomWeightPremeasure& rho, const CofinSet& e) {
  if (rho.is_all_infinite()) return e.is_empty() ? ExtValue() : ExtValue::infinity();
  Rational side = 0;
  for (std::uint64_t n : e.support()) side += rho.weight(n);
  if (!e.is_cofinite()) return ExtValue(side);
  return ExtValue(rho.total_mass().rational() - side);
}

/// Exact mass of a representable set: the finite prefix part plus one
/// geometric series per set residue of the pattern. This is the value of the
/// inf-over-covers extension: the refinement into singletons-plus-tail
/// attains it, and additivity bounds every cover's sum from below (the
/// bracketing oracle certifies the reduction numerically).
inline ExtValue right_extend(const GeomWeightPremeasure& rho, const EventuallyPeriodicSet& a) {
  if (rho.is_all_infinite()) return a.is_empty() ? ExtValue() : ExtValue::infinity();
  std::uint64_t split = std::max<std::uint64_t>(a.prefix_length(), rho.overrides().size());
  Rational total = 0;
  for (std::uint64_t n = 0; n < split; ++n)
    if (a.contains(n)) total += rho.weight(n);
  if (rho.tail() && !a.tail_empty()) {
    const auto& tail = *rho.tail();
    for (std::size_t j = 0; j < a.period(); ++j) {
      // first index >= split in the j-th pattern residue
      std::uint64_t base = a.prefix_length() + j;
      std::uint64_t first =
          base >= split ? base : base + ((split - base + a.period() - 1) / a.period()) * a.period();
      if (a.contains(first))
        total += geometric_tail_sum(tail.coefficient, tail.ratio, a.period(),
                                    static_cast<unsigned long>(first))
                     .rational();
    }
  }
  return ExtValue(total);
}

/// Sup over disjoint algebra families inside the set; for weight models this
/// is the same series, computed here through the complement to keep the two
/// extension routes independent: mass(A) = total - mass(complement A).
inline ExtValue inner_extend(const GeomWeightPremeasure& rho, const EventuallyPeriodicSet& a) {
  if (rho.is_all_infinite()) return a.is_empty() ? ExtValue() : ExtValue::infinity();
  Rational total = rho.total_mass().rational();
  return ExtValue(total - right_extend(rho, a.complement()).rational());
}

/// Exact bracket around right_extend from a depth-limited cover: the summed
/// prefix of the set below `depth`, plus the whole remaining tail mass on
/// the upper side. The bracket width is exactly the tail mass.
inline std::pair<ExtValue, ExtValue> cover_bound_oracle(const GeomWeightPremeasure& rho,
                                                        const EventuallyPeriodicSet& a,
                                                        std::uint64_t depth) {
  if (depth == 0) throw std::invalid_argument("cover_bound_oracle: depth must be positive");
  if (rho.is_all_infinite()) {
    bool seen = false;
    for (std::uint64_t n = 0; n < depth && !seen; ++n) seen = a.contains(n);
    return {seen ? ExtValue::infinity() : ExtValue(), ExtValue::infinity()};
  }
  Rational lower = 0;
  for (std::uint64_t n = 0; n < depth; ++n)
    if (a.contains(n)) lower += rho.weight(n);
  return {ExtValue(lower), ExtValue(lower + rho.tail_mass(depth).rational())};
}

/// For finite total mass the two extensions agree on every sample set.
inline bool uniqueness_check(const GeomWeightPremeasure& rho,
                             const std::vector<EventuallyPeriodicSet>& samples) {
  if (rho.is_all_infinite())
    throw std::domain_error("uniqueness_check: requires finite total mass");
  for (const auto& a : samples)
    if (right_extend(rho, a) != inner_extend(rho, a)) return false;
  return true;
}

/// Algebra element within epsilon of the set: cut at the first index whose
/// remaining tail mass drops below epsilon, keeping either the finite part
/// below the cut or its cofinite completion, whichever leaves the smaller
/// symmetric difference. Sets already in the algebra return themselves.
inline CofinSet approximate_by_algebra(const GeomWeightPremeasure& rho,
                                       const EventuallyPeriodicSet& a, const Rational& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("approximate_by_algebra: epsilon must be > 0");
  if (rho.is_all_infinite())
    throw std::domain_error("approximate_by_algebra: requires finite total mass");
  if (a.is_finite() || a.is_cofinite()) return a.to_cofin();
  std::uint64_t cut = 0;
  while (!(rho.tail_mass(cut) < ExtValue(epsilon))) ++cut;
  // keep the truncation below the cut; when the pattern is mostly ones,
  // complete it cofinitely instead (the discarded piece lies in the tail
  // either way, so the bound holds for both)
  std::size_t set_bits = 0;
  for (bool bit : a.pattern()) set_bits += bit ? 1 : 0;
  CofinSet b;
  if (2 * set_bits > a.period()) {
    std::vector<std::uint64_t> missing;
    for (std::uint64_t n = 0; n < cut; ++n)
      if (!a.contains(n)) missing.push_back(n);
    b = CofinSet::cofinite(std::move(missing));
  } else {
    std::vector<std::uint64_t> below;
    for (std::uint64_t n = 0; n < cut; ++n)
      if (a.contains(n)) below.push_back(n);
    b = CofinSet::finite(std::move(below));
  }
  ExtValue err = right_extend(rho, symmetric_difference(a, EventuallyPeriodicSet::from_cofin(b)));
  if (!(err < ExtValue(epsilon))) throw std::logic_error("approximate_by_algebra: bound violated");
  return b;
}

/// The closure of the restriction and the restriction of the closure agree
/// on algebra elements; computed along the two independent routes (cofinite
/// complement arithmetic vs residue series).
inline bool restriction_compat_check(const GeomWeightPremeasure& rho, const CofinSet& b) {
  ExtValue via_algebra = premeasure_eval(rho, b);
  ExtValue via_fragment = right_extend(rho, EventuallyPeriodicSet::from_cofin(b));
  return via_algebra == via_fragment;
}

}  // namespace kanmeasure
