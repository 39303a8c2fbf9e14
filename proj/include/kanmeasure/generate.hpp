#pragma once

#include <memory>
#include <random>
#include <vector>

#include "geom_premeasure.hpp"
#include "measure_table.hpp"

namespace kanmeasure {

/// Seeded generators for instance families used by the verification suites.
namespace gen {

inline ExtValue random_value(std::mt19937_64& rng, bool allow_infinite = true) {
  static const long nums[] = {0, 1, 1, 1, 2, 3, 5, 7};
  static const long dens[] = {1, 1, 2, 3, 4, 6};
  std::uniform_int_distribution<int> n(0, 7), d(0, 5), coin(0, 9);
  if (allow_infinite && coin(rng) == 0) return ExtValue::infinity();
  return ExtValue(Rational(nums[n(rng)], dens[d(rng)]));
}

inline std::shared_ptr<const SetAlgebra> random_algebra(std::mt19937_64& rng,
                                                        std::size_t max_atoms) {
  std::uniform_int_distribution<int> atoms_d(1, int(max_atoms));
  int atoms = atoms_d(rng);
  // ground points spread unevenly over the atoms
  std::uniform_int_distribution<int> extra(0, 2);
  std::vector<std::vector<int>> atom_sets(atoms);
  int next = 0;
  for (auto& a : atom_sets) {
    a.push_back(next++);
    for (int k = extra(rng); k-- > 0;) a.push_back(next++);
  }
  return std::make_shared<SetAlgebra>(std::size_t(next), std::move(atom_sets));
}

/// Additive extension of random atom values.
inline MeasureTable random_premeasure(std::mt19937_64& rng,
                                      std::shared_ptr<const SetAlgebra> alg,
                                      bool allow_infinite = true) {
  std::vector<ExtValue> atom_values(alg->atom_count());
  for (auto& v : atom_values) v = random_value(rng, allow_infinite);
  std::vector<ExtValue> values(alg->element_count());
  for (SetAlgebra::Mask m = 0; m < values.size(); ++m)
    for (std::size_t t = 0; t < alg->atom_count(); ++t)
      if (m & (SetAlgebra::Mask(1) << t)) values[m] += atom_values[t];
  return MeasureTable(std::move(alg), std::move(values), MeasureKind::premeasure);
}

/// Random monotone table with value 0 on the empty set: random values
/// repaired upward along inclusion.
inline MeasureTable random_monotone_table(std::mt19937_64& rng,
                                          std::shared_ptr<const SetAlgebra> alg,
                                          bool allow_infinite = true, bool zero_empty = true) {
  std::vector<ExtValue> values(alg->element_count());
  for (SetAlgebra::Mask m = zero_empty ? 1 : 0; m < values.size(); ++m)
    values[m] = random_value(rng, allow_infinite);
  for (SetAlgebra::Mask m = 0; m < values.size(); ++m)
    for (SetAlgebra::Mask s = 0; s < values.size(); ++s)
      if (SetAlgebra::subset(s, m)) values[m] = max(values[m], values[s]);
  return MeasureTable(std::move(alg), std::move(values), MeasureKind::general);
}

/// Random outer premeasure: the greatest outer table below a random
/// monotone one.
inline MeasureTable random_outer(std::mt19937_64& rng, std::shared_ptr<const SetAlgebra> alg,
                                 bool allow_infinite = true) {
  return greatest_outer_below(random_monotone_table(rng, std::move(alg), allow_infinite));
}

/// Random inner premeasure: best partition sums of a random monotone table
/// are superadditive and monotone.
inline MeasureTable random_inner(std::mt19937_64& rng, std::shared_ptr<const SetAlgebra> alg,
                                 bool allow_infinite = true) {
  MeasureTable base = random_monotone_table(rng, alg, allow_infinite);
  return MeasureTable(std::move(alg), detail::optimal_partition_sums(base, true),
                      MeasureKind::inner);
}

inline MeasureTable random_table_of_kind(std::mt19937_64& rng,
                                         std::shared_ptr<const SetAlgebra> alg, MeasureKind kind,
                                         bool allow_infinite = true) {
  switch (kind) {
    case MeasureKind::premeasure: return random_premeasure(rng, std::move(alg), allow_infinite);
    case MeasureKind::outer: return random_outer(rng, std::move(alg), allow_infinite);
    case MeasureKind::inner: return random_inner(rng, std::move(alg), allow_infinite);
    default: return random_monotone_table(rng, std::move(alg), allow_infinite);
  }
}

inline GeomWeightPremeasure random_weight_premeasure(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_over(0, 4), wn(0, 8), wd(1, 5), coin(0, 3);
  std::vector<Rational> overrides(n_over(rng));
  for (auto& w : overrides) w = Rational(wn(rng), wd(rng));
  if (coin(rng) == 0) return GeomWeightPremeasure::with_zero_tail(std::move(overrides));
  std::uniform_int_distribution<int> rn(0, 4);
  Rational c(wn(rng), wd(rng));
  Rational r(rn(rng), 5);  // in [0, 4/5]
  return GeomWeightPremeasure::with_geometric_tail(std::move(overrides), c, r);
}

inline EventuallyPeriodicSet random_eps(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> plen(0, 6), period(1, 4), coin(0, 1);
  std::vector<bool> prefix(plen(rng)), pattern(period(rng));
  for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = coin(rng);
  for (std::size_t i = 0; i < pattern.size(); ++i) pattern[i] = coin(rng);
  return EventuallyPeriodicSet(std::move(prefix), std::move(pattern));
}

}  // namespace gen
}  // namespace kanmeasure
