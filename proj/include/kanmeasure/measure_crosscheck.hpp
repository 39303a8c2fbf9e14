#pragma once

#include <random>

#include "generate.hpp"
#include "measure_encoding.hpp"
#include "monad.hpp"

namespace kanmeasure {

struct CrosscheckOptions {
  std::size_t samples = 6;
  std::uint64_t seed = 0;
};

/// Agreement record between the closed-form table operations and the engine
/// run on the table's encoding.
struct CrosscheckReport {
  bool encode_kind_ok = false;
  bool roundtrip_ok = false;
  bool closure_agrees = false;
  bool closure_strict = false;
  bool set_variant_ok = false;
  bool strictness_sampled_ok = false;
  bool prop41_ok = false;

  bool passed() const {
    return encode_kind_ok && roundtrip_ok && closure_agrees && closure_strict && set_variant_ok &&
           strictness_sampled_ok && prop41_ok;
  }
};

/// Encodes the table over the bounded partial-map index category, runs the
/// engine counterpart of its closure (sup formula for outer, inf formula for
/// inner and general), decodes, and compares exactly with the closed form.
/// Also samples both halves of the strictness condition on the encoding and
/// the universal property that identifies the empty-class closure with the
/// class-respecting one. The index bound must reach the atom count for the
/// formulas to attain the closed forms, so algebras beyond 3 atoms are
/// rejected.
inline CrosscheckReport engine_crosscheck(const MeasureTable& m,
                                          const CrosscheckOptions& opts = {}) {
  const std::size_t atoms = m.algebra().atom_count();
  if (atoms > 3) throw std::invalid_argument("engine_crosscheck: more than 3 atoms");
  const std::size_t bound = std::max<std::size_t>(2, atoms);
  const MeasureEncoding& enc = MeasureEncoding::shared(atoms, IndexVariant::partial, bound);
  CrosscheckReport rep;

  auto t = enc.encode(m);
  Kind expected = MeasureEncoding::expected_kind(m.declared_kind());
  // a general table with nonzero empty-set value is no class-respecting
  // transformation at all (the nowhere-defined maps force value 0 on the
  // empty family); the formula checks below still apply
  bool outside_class = m.declared_kind() == MeasureKind::general && !m.value(0).is_zero();
  rep.encode_kind_ok = outside_class || is_kind(t, enc.sigma(), expected);
  rep.roundtrip_ok = enc.decode(t, m.declared_kind(), m.algebra_ptr()) == m;

  switch (m.declared_kind()) {
    case MeasureKind::premeasure: {
      rep.closure_agrees = colax_closure_formula(t) == t && lax_kernel_formula(t) == t;
      rep.closure_strict = is_kind(t, enc.sigma(), Kind::strict);
      break;
    }
    case MeasureKind::outer: {
      auto closed = colax_closure_formula(t);
      rep.closure_agrees = closed == enc.encode(least_premeasure_above(m));
      rep.closure_strict = is_kind(closed, enc.sigma(), Kind::strict);
      break;
    }
    case MeasureKind::inner: {
      auto kernel = lax_kernel_formula(t);
      rep.closure_agrees = kernel == enc.encode(greatest_premeasure_below(m));
      rep.closure_strict = is_kind(kernel, enc.sigma(), Kind::strict);
      break;
    }
    default: {
      auto kernel = lax_kernel_formula(t);
      rep.closure_agrees = kernel == enc.encode(greatest_outer_below(m));
      rep.closure_strict = is_kind(kernel, enc.sigma(), Kind::lax);
      break;
    }
  }

  // total-map picture: premeasures are the strict transformations there
  rep.set_variant_ok = true;
  if (m.declared_kind() == MeasureKind::premeasure || m.declared_kind() == MeasureKind::outer) {
    const MeasureEncoding& set_enc = MeasureEncoding::shared(atoms, IndexVariant::total, bound);
    auto ts = set_enc.encode(m);
    MorphismClass none = MorphismClass::empty(set_enc.index_category().category());
    KindReport k = classify(ts, none);
    if (m.declared_kind() == MeasureKind::premeasure)
      rep.set_variant_ok =
          k.is_strict && set_enc.decode(ts, m.declared_kind(), m.algebra_ptr()) == m;
    else
      rep.set_variant_ok = k.is_lax && colax_closure_formula(ts) ==
                                           set_enc.encode(least_premeasure_above(m));
  }

  // sampled strictness condition on this instance: closures of sampled lax
  // encodings and kernels of sampled colax encodings are strict
  std::mt19937_64 rng(opts.seed);
  rep.strictness_sampled_ok = true;
  for (std::size_t i = 0; i < opts.samples; ++i) {
    auto outer_t = enc.encode(gen::random_outer(rng, m.algebra_ptr()));
    if (!is_kind(colax_closure_formula(outer_t), enc.sigma(), Kind::strict))
      rep.strictness_sampled_ok = false;
    auto inner_t = enc.encode(gen::random_inner(rng, m.algebra_ptr()));
    if (!is_kind(lax_kernel_formula(inner_t), enc.sigma(), Kind::strict))
      rep.strictness_sampled_ok = false;
  }

  // the empty-class closure formula also serves the class-respecting side:
  // it must land in the class, sit above the input, and be below every
  // sampled class-respecting colax transformation above the input
  rep.prop41_ok = true;
  if (m.declared_kind() == MeasureKind::outer) {
    auto closed = colax_closure_formula(t);
    KindReport k = classify(closed, enc.sigma());
    rep.prop41_ok = k.is_general && k.is_colax && t.leq(closed);
    MeasureTable closed_table = least_premeasure_above(m);
    for (std::size_t i = 0; i < opts.samples && rep.prop41_ok; ++i) {
      // an inner table above m: best partition sums of (random monotone) v m
      MeasureTable mono = gen::random_monotone_table(rng, m.algebra_ptr());
      std::vector<ExtValue> lifted(mono.values().size());
      for (std::size_t v = 0; v < lifted.size(); ++v)
        lifted[v] = max(mono.values()[v], m.values()[v]);
      MeasureTable base(m.algebra_ptr(), std::move(lifted), MeasureKind::general);
      MeasureTable inner_above(m.algebra_ptr(), detail::optimal_partition_sums(base, true),
                               MeasureKind::inner);
      if (!closed_table.leq(inner_above)) rep.prop41_ok = false;
    }
  }
  return rep;
}

/// Joins through the engine: encode the premeasures, join pointwise, close
/// with the sup formula, decode, and compare with the closed-form join.
inline bool crosscheck_join(const std::vector<MeasureTable>& family,
                            const CrosscheckOptions& opts = {}) {
  (void)opts;
  if (family.empty()) throw std::invalid_argument("crosscheck_join: empty family");
  const std::size_t atoms = family.front().algebra().atom_count();
  if (atoms > 3) throw std::invalid_argument("crosscheck_join: more than 3 atoms");
  const MeasureEncoding& enc =
      MeasureEncoding::shared(atoms, IndexVariant::partial, std::max<std::size_t>(2, atoms));
  std::vector<Transformation<WeightFunctor>> encodings;
  for (const auto& m : family) encodings.push_back(enc.encode_checked(m));
  auto joined = pointwise_join(encodings, enc.sigma());
  auto closed = colax_closure_formula(joined);
  if (!is_kind(closed, enc.sigma(), Kind::strict)) return false;
  return enc.decode(closed, MeasureKind::premeasure, family.front().algebra_ptr()) ==
         join_premeasures(family);
}

}  // namespace kanmeasure
