#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ext_value.hpp"
#include "set_algebra.hpp"

namespace kanmeasure {

enum class MeasureKind { premeasure, outer, inner, general };

inline const char* measure_kind_name(MeasureKind k) {
  switch (k) {
    case MeasureKind::premeasure: return "premeasure";
    case MeasureKind::outer: return "outer";
    case MeasureKind::inner: return "inner";
    default: return "general";
  }
}

inline MeasureKind parse_measure_kind(const std::string& s) {
  if (s == "premeasure") return MeasureKind::premeasure;
  if (s == "outer") return MeasureKind::outer;
  if (s == "inner") return MeasureKind::inner;
  if (s == "general") return MeasureKind::general;
  throw std::invalid_argument("unknown measure kind: " + s);
}

/// Total value table over a finite set algebra. The empty set must carry 0
/// for the premeasure/outer/inner kinds; the general kind requires only
/// monotonicity. The declared kind's full law is the business of
/// validate_measure_kind.
class MeasureTable {
 public:
  MeasureTable() = default;

  MeasureTable(std::shared_ptr<const SetAlgebra> algebra, std::vector<ExtValue> values,
               MeasureKind declared)
      : algebra_(std::move(algebra)), values_(std::move(values)), declared_(declared) {
    if (values_.size() != algebra_->element_count())
      throw std::invalid_argument("measure table: value count mismatch");
    if (declared_ != MeasureKind::general && !values_[0].is_zero())
      throw std::invalid_argument("measure table: empty set must have value 0");
    if (declared_ == MeasureKind::general) {
      for (SetAlgebra::Mask a = 0; a < values_.size(); ++a)
        for (SetAlgebra::Mask b = 0; b < values_.size(); ++b)
          if (SetAlgebra::subset(a, b) && !(values_[a] <= values_[b]))
            throw std::invalid_argument("measure table: general kind requires monotonicity");
    }
  }

  const SetAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const SetAlgebra>& algebra_ptr() const { return algebra_; }
  MeasureKind declared_kind() const { return declared_; }
  const ExtValue& value(SetAlgebra::Mask m) const { return values_.at(m); }
  const std::vector<ExtValue>& values() const { return values_; }

  bool leq(const MeasureTable& o) const {
    for (std::size_t m = 0; m < values_.size(); ++m)
      if (!(values_[m] <= o.values_[m])) return false;
    return true;
  }
  friend bool operator==(const MeasureTable& a, const MeasureTable& b) {
    return a.values_ == b.values_;
  }

  MeasureTable with_kind(MeasureKind k) const { return MeasureTable(algebra_, values_, k); }

 private:
  std::shared_ptr<const SetAlgebra> algebra_;
  std::vector<ExtValue> values_;
  MeasureKind declared_ = MeasureKind::general;
};

struct MeasureKindReport {
  bool zero_empty = false;
  bool monotone = false;
  bool additive = false;       // equality on every disjoint family
  bool subadditive = false;    // <=
  bool superadditive = false;  // >=
  bool premeasure = false;
  bool outer = false;
  bool inner = false;
  std::optional<std::string> additive_witness, subadditive_witness, superadditive_witness,
      monotone_witness;
};

/// Checks the three laws over every disjoint family of algebra elements
/// whose union is again in the algebra. On a finite carrier these reduce to
/// partitions of each element into nonempty blocks; countable families add
/// only empty members, which contribute 0 once the empty set carries 0.
inline MeasureKindReport validate_measure_kind(const MeasureTable& m) {
  const SetAlgebra& alg = m.algebra();
  MeasureKindReport rep;
  rep.zero_empty = m.value(0).is_zero();
  rep.monotone = true;
  for (SetAlgebra::Mask a = 0; a < alg.element_count() && rep.monotone; ++a)
    for (SetAlgebra::Mask b = 0; b < alg.element_count(); ++b)
      if (SetAlgebra::subset(a, b) && !(m.value(a) <= m.value(b))) {
        rep.monotone = false;
        rep.monotone_witness = alg.mask_name(a) + " <= " + alg.mask_name(b) + " but " +
                               m.value(a).to_string() + " > " + m.value(b).to_string();
        break;
      }
  rep.additive = rep.subadditive = rep.superadditive = true;
  for (SetAlgebra::Mask u = 0; u < alg.element_count(); ++u) {
    for_each_disjoint_partition(alg, u, [&](const std::vector<SetAlgebra::Mask>& blocks) {
      ExtValue sum;
      for (auto b : blocks) sum += m.value(b);
      auto witness = [&] {
        std::string s = alg.mask_name(u) + " -> " + m.value(u).to_string() + " vs blocks";
        for (auto b : blocks) s += " " + alg.mask_name(b);
        return s + " summing to " + sum.to_string();
      };
      if (m.value(u) != sum && rep.additive) {
        rep.additive = false;
        rep.additive_witness = witness();
      }
      if (!(m.value(u) <= sum) && rep.subadditive) {
        rep.subadditive = false;
        rep.subadditive_witness = witness();
      }
      if (!(sum <= m.value(u)) && rep.superadditive) {
        rep.superadditive = false;
        rep.superadditive_witness = witness();
      }
    });
  }
  rep.premeasure = rep.additive && rep.zero_empty;
  rep.outer = rep.subadditive && rep.monotone && rep.zero_empty;
  rep.inner = rep.superadditive && rep.monotone && rep.zero_empty;
  return rep;
}

namespace detail {

/// Best (max or min) partition-sum table over all algebra elements, by
/// dynamic programming over atom subsets: the block containing the lowest
/// atom is chosen, the rest recurses.
inline std::vector<ExtValue> optimal_partition_sums(const MeasureTable& m, bool maximize) {
  const SetAlgebra& alg = m.algebra();
  const std::size_t n = alg.element_count();
  std::vector<ExtValue> best(n);
  std::vector<char> done(n, 0);
  done[0] = 1;  // empty partition
  for (SetAlgebra::Mask s = 1; s < n; ++s) {
    SetAlgebra::Mask low = s & (~s + 1);
    SetAlgebra::Mask rest = s ^ low;
    std::optional<ExtValue> acc;
    SetAlgebra::Mask sub = 0;
    while (true) {
      SetAlgebra::Mask block = low | sub;
      ExtValue cand = m.value(block) + best[s ^ block];
      if (!acc || (maximize ? *acc < cand : cand < *acc)) acc = cand;
      if (sub == rest) break;
      sub = (sub - rest) & rest;
    }
    best[s] = *acc;
    done[s] = 1;
  }
  return best;
}

}  // namespace detail

/// Least premeasure above an outer premeasure: the supremum over disjoint
/// families inside each element of the family's value sum. On a finite
/// algebra the supremum is attained on partitions of the element itself.
inline MeasureTable least_premeasure_above(const MeasureTable& m) {
  if (!validate_measure_kind(m).outer)
    throw std::invalid_argument("least_premeasure_above: input is not an outer premeasure");
  return MeasureTable(m.algebra_ptr(), detail::optimal_partition_sums(m, true),
                      MeasureKind::premeasure);
}

/// Greatest premeasure below an inner premeasure: the infimum over disjoint
/// covers, attained on partitions of the element for monotone tables.
inline MeasureTable greatest_premeasure_below(const MeasureTable& m) {
  if (!validate_measure_kind(m).inner)
    throw std::invalid_argument("greatest_premeasure_below: input is not an inner premeasure");
  return MeasureTable(m.algebra_ptr(), detail::optimal_partition_sums(m, false),
                      MeasureKind::premeasure);
}

/// Greatest outer premeasure below a monotone table: infimum over disjoint
/// covers of each element; the empty family covers the empty set, forcing
/// value 0 there.
inline MeasureTable greatest_outer_below(const MeasureTable& m) {
  MeasureKindReport rep = validate_measure_kind(m);
  if (!rep.monotone) throw std::invalid_argument("greatest_outer_below: input is not monotone");
  std::vector<ExtValue> values = detail::optimal_partition_sums(m, false);
  values[0] = ExtValue();  // the empty cover
  return MeasureTable(m.algebra_ptr(), std::move(values), MeasureKind::outer);
}

inline void require_same_algebra(const MeasureTable& a, const MeasureTable& b) {
  if (a.algebra().atoms() != b.algebra().atoms() ||
      a.algebra().ground_size() != b.algebra().ground_size())
    throw std::invalid_argument("measure tables live on different algebras");
}

/// Join of premeasures: the least premeasure above the pointwise maximum,
/// i.e. the supremum over disjoint families of the blockwise joined values.
inline MeasureTable join_premeasures(const std::vector<MeasureTable>& family) {
  if (family.empty()) throw std::invalid_argument("join_premeasures: empty family");
  for (const auto& m : family) {
    require_same_algebra(family.front(), m);
    if (!validate_measure_kind(m).premeasure)
      throw std::invalid_argument("join_premeasures: input is not a premeasure");
  }
  std::vector<ExtValue> pointwise(family.front().values().size());
  for (std::size_t i = 0; i < pointwise.size(); ++i)
    for (const auto& m : family) pointwise[i] = max(pointwise[i], m.values()[i]);
  MeasureTable joined(family.front().algebra_ptr(), std::move(pointwise), MeasureKind::outer);
  return least_premeasure_above(joined);
}

}  // namespace kanmeasure
