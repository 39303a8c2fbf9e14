#pragma once

#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "transformation.hpp"

namespace kanmeasure {

/// Per-morphism hypothesis check used by joins/meets of transformations.
template <class GB>
void require_sigma_preserves_joins(const GB& g, const Finite2Category& cat,
                                   const MorphismClass& sigma) {
  for (int f : sigma.members())
    if (!g.preserves_joins_on(f))
      throw std::invalid_argument("join-preservation hypothesis fails for " +
                                  cat.morphism(f).name);
}

template <class GB>
void require_sigma_preserves_meets(const GB& g, const Finite2Category& cat,
                                   const MorphismClass& sigma) {
  for (int f : sigma.members())
    if (!g.preserves_meets_on(f))
      throw std::invalid_argument("meet-preservation hypothesis fails for " +
                                  cat.morphism(f).name);
}

/// Componentwise join of a nonempty family. When every input satisfies the
/// equality law on `sigma` and each Gf for f in sigma preserves joins, the
/// result does too; when every input is lax, the result is lax.
template <class GB>
Transformation<GB> pointwise_join(const std::vector<Transformation<GB>>& family,
                                  const MorphismClass& sigma) {
  if (family.empty()) throw std::invalid_argument("pointwise_join: empty family");
  const PosetFunctor& f = family.front().source();
  const GB& g = family.front().value_functor();
  require_sigma_preserves_joins(g, f.category(), sigma);
  std::vector<std::vector<typename GB::Value>> comp(f.category().num_objects());
  for (std::size_t a = 0; a < comp.size(); ++a) {
    comp[a].reserve(f.value_count(int(a)));
    for (std::size_t x = 0; x < f.value_count(int(a)); ++x) {
      std::vector<typename GB::Value> vals;
      vals.reserve(family.size());
      for (const auto& t : family) vals.push_back(t.at(int(a), int(x)));
      comp[a].push_back(g.sup(int(a), vals));
    }
  }
  return Transformation<GB>(&f, &g, std::move(comp));
}

template <class GB>
Transformation<GB> pointwise_meet(const std::vector<Transformation<GB>>& family,
                                  const MorphismClass& sigma) {
  if (family.empty()) throw std::invalid_argument("pointwise_meet: empty family");
  const PosetFunctor& f = family.front().source();
  const GB& g = family.front().value_functor();
  require_sigma_preserves_meets(g, f.category(), sigma);
  std::vector<std::vector<typename GB::Value>> comp(f.category().num_objects());
  for (std::size_t a = 0; a < comp.size(); ++a) {
    comp[a].reserve(f.value_count(int(a)));
    for (std::size_t x = 0; x < f.value_count(int(a)); ++x) {
      std::vector<typename GB::Value> vals;
      vals.reserve(family.size());
      for (const auto& t : family) vals.push_back(t.at(int(a), int(x)));
      comp[a].push_back(g.inf(int(a), vals));
    }
  }
  return Transformation<GB>(&f, &g, std::move(comp));
}

namespace detail {

/// Greatest element z <= cap with Gf(z) <= target, via join over the
/// down-set; requires Gf to preserve joins for the bound to be exact.
inline int largest_below_with_image_below(const FiniteLattice& ga, const FiniteLattice& gb,
                                          const MonotoneMap& gf, int cap, int target) {
  int acc = ga.bottom();
  for (std::size_t z = 0; z < ga.size(); ++z)
    if (ga.leq(int(z), cap) && gb.leq(gf(int(z)), target)) acc = ga.join(acc, int(z));
  return acc;
}

inline int least_above_with_image_above(const FiniteLattice& ga, const FiniteLattice& gb,
                                        const MonotoneMap& gf, int floor, int target) {
  int acc = ga.top();
  for (std::size_t z = 0; z < ga.size(); ++z)
    if (ga.leq(floor, int(z)) && gb.leq(target, gf(int(z)))) acc = ga.meet(acc, int(z));
  return acc;
}

}  // namespace detail

/// The largest lax transformation below `tau` that commutes strictly on
/// `sigma` (the right adjoint of the lax inclusion), computed as a downward
/// fixpoint on the finite value lattices: violations of the lax inequality
/// lower the target component, violated sigma-equalities lower the source
/// component to the largest preimage bound, and component monotonicity is
/// restored after each pass. Termination: every repair strictly descends in
/// a finite lattice.
inline Transformation<PosetFunctor> reflect_lax(const Transformation<PosetFunctor>& tau,
                                                const MorphismClass& sigma) {
  const PosetFunctor& f = tau.source();
  const PosetFunctor& g = tau.value_functor();
  const Finite2Category& cat = f.category();
  require_sigma_preserves_joins(g, cat, sigma);
  auto comp = tau.components();

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < comp.size(); ++a) {
      const FinitePreorder& fa = f.poset(int(a));
      const FiniteLattice& ga = g.lattice_or_throw(int(a));
      for (std::size_t x = 0; x < fa.size(); ++x)
        for (std::size_t y = 0; y < fa.size(); ++y)
          if (fa.leq(int(x), int(y))) {
            int nv = ga.meet(comp[a][x], comp[a][y]);
            if (nv != comp[a][x]) {
              comp[a][x] = nv;
              changed = true;
            }
          }
    }
    for (std::size_t m = 0; m < cat.num_morphisms(); ++m) {
      int a = cat.source(int(m)), b = cat.target(int(m));
      const FiniteLattice& ga = g.lattice_or_throw(a);
      const FiniteLattice& gb = g.lattice_or_throw(b);
      for (std::size_t x = 0; x < f.value_count(a); ++x) {
        int image = f.apply(int(m), int(x));
        int lhs = g.apply(int(m), comp[a][x]);
        if (!gb.leq(comp[b][image], lhs)) {
          comp[b][image] = gb.meet(comp[b][image], lhs);
          changed = true;
        }
        if (sigma.contains(int(m))) {
          lhs = g.apply(int(m), comp[a][x]);
          if (lhs != comp[b][f.apply(int(m), int(x))]) {
            int nv = detail::largest_below_with_image_below(ga, gb, g.action(int(m)), comp[a][x],
                                                            comp[b][image]);
            if (nv != comp[a][x]) {
              comp[a][x] = nv;
              changed = true;
            }
          }
        }
      }
    }
  }
  return Transformation<PosetFunctor>(&f, &g, std::move(comp));
}

/// Dual of reflect_lax: the least colax transformation above `tau`.
inline Transformation<PosetFunctor> coreflect_colax(const Transformation<PosetFunctor>& tau,
                                                    const MorphismClass& sigma) {
  const PosetFunctor& f = tau.source();
  const PosetFunctor& g = tau.value_functor();
  const Finite2Category& cat = f.category();
  require_sigma_preserves_meets(g, cat, sigma);
  auto comp = tau.components();

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < comp.size(); ++a) {
      const FinitePreorder& fa = f.poset(int(a));
      const FiniteLattice& ga = g.lattice_or_throw(int(a));
      for (std::size_t x = 0; x < fa.size(); ++x)
        for (std::size_t y = 0; y < fa.size(); ++y)
          if (fa.leq(int(x), int(y))) {
            int nv = ga.join(comp[a][y], comp[a][x]);
            if (nv != comp[a][y]) {
              comp[a][y] = nv;
              changed = true;
            }
          }
    }
    for (std::size_t m = 0; m < cat.num_morphisms(); ++m) {
      int a = cat.source(int(m)), b = cat.target(int(m));
      const FiniteLattice& ga = g.lattice_or_throw(a);
      const FiniteLattice& gb = g.lattice_or_throw(b);
      for (std::size_t x = 0; x < f.value_count(a); ++x) {
        int image = f.apply(int(m), int(x));
        int lhs = g.apply(int(m), comp[a][x]);
        if (!gb.leq(lhs, comp[b][image])) {
          comp[b][image] = gb.join(comp[b][image], lhs);
          changed = true;
        }
        if (sigma.contains(int(m))) {
          lhs = g.apply(int(m), comp[a][x]);
          if (lhs != comp[b][image]) {
            int nv = detail::least_above_with_image_above(ga, gb, g.action(int(m)), comp[a][x],
                                                          comp[b][image]);
            if (nv != comp[a][x]) {
              comp[a][x] = nv;
              changed = true;
            }
          }
        }
      }
    }
  }
  return Transformation<PosetFunctor>(&f, &g, std::move(comp));
}

/// Least colax transformation above a lax one (the closure step of the
/// lax-to-colax adjunction). Input must classify as lax.
inline Transformation<PosetFunctor> colax_closure(const Transformation<PosetFunctor>& lambda,
                                                  const MorphismClass& sigma) {
  if (!classify(lambda, sigma).is_lax) throw std::invalid_argument("colax_closure: input not lax");
  return coreflect_colax(lambda, sigma);
}

/// Greatest lax transformation below a colax one.
inline Transformation<PosetFunctor> lax_kernel(const Transformation<PosetFunctor>& sigma_t,
                                               const MorphismClass& sigma) {
  if (!classify(sigma_t, sigma).is_colax) throw std::invalid_argument("lax_kernel: input not colax");
  return reflect_lax(sigma_t, sigma);
}

/// All transformations F -> G of the requested kind, by exhausting the
/// product of per-object monotone component tables. Throws std::length_error
/// when the candidate count exceeds `limit`.
inline std::vector<Transformation<PosetFunctor>> enumerate_transformations(
    const PosetFunctor& f, const PosetFunctor& g, const MorphismClass& sigma,
    std::optional<Kind> kind = std::nullopt, std::size_t limit = 1'000'000) {
  const Finite2Category& cat = f.category();
  std::vector<std::vector<std::vector<int>>> per_object;
  double total = 1;
  for (std::size_t a = 0; a < cat.num_objects(); ++a) {
    per_object.push_back(enumerate_monotone_tables(f.poset(int(a)), g.poset(int(a)), limit));
    total *= double(per_object.back().size());
    if (total > double(limit)) throw std::length_error("transformation enumeration limit exceeded");
  }
  std::vector<Transformation<PosetFunctor>> out;
  std::vector<std::vector<int>> comp(cat.num_objects());
  std::function<void(std::size_t)> rec = [&](std::size_t a) {
    if (a == cat.num_objects()) {
      Transformation<PosetFunctor> t(&f, &g, comp);
      if (!kind || is_kind(t, sigma, *kind)) out.push_back(std::move(t));
      return;
    }
    for (const auto& table : per_object[a]) {
      comp[a] = table;
      rec(a + 1);
    }
  };
  rec(0);
  return out;
}

/// Seeded random transformation: random values repaired upward to component
/// monotonicity along a linear extension.
inline Transformation<PosetFunctor> random_transformation(const PosetFunctor& f,
                                                          const PosetFunctor& g,
                                                          std::mt19937_64& rng) {
  const Finite2Category& cat = f.category();
  std::vector<std::vector<int>> comp(cat.num_objects());
  for (std::size_t a = 0; a < cat.num_objects(); ++a) {
    const FinitePreorder& fa = f.poset(int(a));
    const FiniteLattice& ga = g.lattice_or_throw(int(a));
    std::uniform_int_distribution<int> dist(0, int(ga.size()) - 1);
    std::vector<int> table(fa.size());
    for (auto& v : table) v = dist(rng);
    for (int x : fa.linear_extension())
      for (std::size_t y = 0; y < fa.size(); ++y)
        if (fa.leq(int(y), int(x)) && int(y) != x) table[x] = ga.join(table[x], table[y]);
    comp[a] = std::move(table);
  }
  return Transformation<PosetFunctor>(&f, &g, comp);
}

struct StrictnessReport {
  bool holds_for_lax = false;    // closure of every lax transformation is strict
  bool holds_for_colax = false;  // kernel of every colax transformation is strict
  bool agree = false;
  bool sampled = false;
  std::size_t lax_checked = 0;
  std::size_t colax_checked = 0;
  std::optional<Witness> witness;
};

struct StrictnessOptions {
  std::size_t exhaustive_limit = 200'000;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
};

/// Evaluates the two effective halves of the strictness condition: the colax
/// closure of every lax transformation is strict, and dually. Exhaustive when
/// the candidate space fits under the limit, otherwise a seeded sample of
/// reflected random transformations.
inline StrictnessReport check_strictness_condition(const PosetFunctor& f, const PosetFunctor& g,
                                                   const MorphismClass& sigma,
                                                   const StrictnessOptions& opts = {}) {
  StrictnessReport rep;
  std::vector<Transformation<PosetFunctor>> lax_cands, colax_cands;
  try {
    lax_cands = enumerate_transformations(f, g, sigma, Kind::lax, opts.exhaustive_limit);
    colax_cands = enumerate_transformations(f, g, sigma, Kind::colax, opts.exhaustive_limit);
  } catch (const std::length_error&) {
    rep.sampled = true;
    std::mt19937_64 rng(opts.seed);
    for (std::size_t i = 0; i < opts.samples; ++i) {
      lax_cands.push_back(reflect_lax(random_transformation(f, g, rng), sigma));
      colax_cands.push_back(coreflect_colax(random_transformation(f, g, rng), sigma));
    }
  }
  rep.holds_for_lax = true;
  for (const auto& l : lax_cands) {
    ++rep.lax_checked;
    auto closed = coreflect_colax(l, sigma);
    KindReport k = classify(closed, sigma);
    if (!k.is_strict) {
      rep.holds_for_lax = false;
      rep.witness = k.is_lax ? k.colax_witness : k.lax_witness;
      break;
    }
  }
  rep.holds_for_colax = true;
  for (const auto& c : colax_cands) {
    ++rep.colax_checked;
    auto kernel = reflect_lax(c, sigma);
    KindReport k = classify(kernel, sigma);
    if (!k.is_strict) {
      rep.holds_for_colax = false;
      if (!rep.witness) rep.witness = k.is_lax ? k.colax_witness : k.lax_witness;
      break;
    }
  }
  rep.agree = rep.holds_for_lax == rep.holds_for_colax;
  return rep;
}

/// Join of a family of strict transformations: the colax closure of the
/// pointwise join. Requires the strictness condition (asserted by throwing
/// when the closure fails to be strict).
inline Transformation<PosetFunctor> join_strict(
    const std::vector<Transformation<PosetFunctor>>& family, const MorphismClass& sigma) {
  for (const auto& t : family)
    if (!classify(t, sigma).is_strict) throw std::invalid_argument("join_strict: input not strict");
  auto joined = pointwise_join(family, sigma);
  auto closed = coreflect_colax(joined, sigma);
  if (!classify(closed, sigma).is_strict)
    throw std::invalid_argument("join_strict: strictness condition fails on this instance");
  return closed;
}

}  // namespace kanmeasure
