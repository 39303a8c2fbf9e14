#pragma once

#include <vector>

#include "order.hpp"

namespace kanmeasure {

/// A functor between finite preorder-shaped categories is weakly final iff
/// every slice under a target object is nonempty: for each d there is a c
/// with d <= Fun(c).
inline bool weakly_final_check(const MonotoneMap& fun) {
  const FinitePreorder& src = *fun.source();
  const FinitePreorder& dst = *fun.target();
  for (std::size_t d = 0; d < dst.size(); ++d) {
    bool hit = false;
    for (std::size_t c = 0; c < src.size() && !hit; ++c)
      if (dst.leq(int(d), fun(int(c)))) hit = true;
    if (!hit) return false;
  }
  return true;
}

/// Colimit of a poset-shaped diagram into a finite lattice: the join of the
/// diagram's values.
inline int colimit(const MonotoneMap& diagram, const FiniteLattice& value_lattice) {
  std::vector<int> all(diagram.source()->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = diagram(int(i));
  return value_lattice.join_of(all);
}

/// The two-chain diagram that detects weak finality: 0 on objects whose
/// slice under the functor is nonempty, 1 elsewhere. Restricting along the
/// functor always yields the constant-0 diagram, so the colimits disagree
/// exactly when some slice is empty.
inline MonotoneMap finality_witness_diagram(const MonotoneMap& fun,
                                            const std::shared_ptr<const FiniteLattice>& two_chain) {
  const FinitePreorder& dst = *fun.target();
  std::vector<int> table(dst.size(), 1);
  for (std::size_t d = 0; d < dst.size(); ++d)
    for (std::size_t c = 0; c < fun.source()->size(); ++c)
      if (dst.leq(int(d), fun(int(c)))) table[d] = 0;
  return MonotoneMap(fun.target(), two_chain, std::move(table));
}

}  // namespace kanmeasure
