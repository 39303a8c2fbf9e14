#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "functor.hpp"
#include "transformation.hpp"

namespace kanmeasure {

/// The three pair constructions over a functor F at an object A. Elements are
/// pairs (g: B -> A, y in FB) in every variant; they differ in the preorder:
///  - sharp:  (g1,y1) <= (g2,y2) iff some s: B2 -> B1 has g1.s <= g2 and
///            y1 <= Fs(y2); realizes lax transformations as strict ones.
///  - flat:   dual, s: B1 -> B2 with g1 <= g2.s and Fs(y1) <= y2; colax case.
///  - plain:  no cross-pair relations beyond g1 <= g2 within a hom and
///            y1 <= y2; realizes general transformations.
enum class CoendVariant { sharp, flat, plain };

inline const char* coend_variant_name(CoendVariant v) {
  switch (v) {
    case CoendVariant::sharp: return "sharp";
    case CoendVariant::flat: return "flat";
    default: return "plain";
  }
}

namespace detail {

inline bool coend_pair_leq(const PosetFunctor& f, CoendVariant v, std::pair<int, int> e1,
                           std::pair<int, int> e2) {
  const Finite2Category& cat = f.category();
  auto [g1, y1] = e1;
  auto [g2, y2] = e2;
  int b1 = cat.source(g1), b2 = cat.source(g2);
  switch (v) {
    case CoendVariant::sharp:
      for (int s : cat.morphisms_between(b2, b1))
        if (cat.leq2(cat.compose(g1, s), g2) && f.poset(b1).leq(y1, f.apply(s, y2))) return true;
      return false;
    case CoendVariant::flat:
      for (int s : cat.morphisms_between(b1, b2))
        if (cat.leq2(g1, cat.compose(g2, s)) && f.poset(b2).leq(f.apply(s, y1), y2)) return true;
      return false;
    default:
      return cat.leq2(g1, g2) && b1 == b2 && f.poset(b1).leq(y1, y2);
  }
}

}  // namespace detail

/// The pair construction at one object, with its preorder and the counit
/// values (g, y) |-> Fg(y).
struct CoendCategory {
  int apex = -1;
  CoendVariant variant = CoendVariant::sharp;
  std::vector<std::pair<int, int>> elems;  // (morphism into apex, element of F(source))
  std::shared_ptr<const FinitePreorder> order;
  std::vector<int> counit;  // Fg(y), an element of F(apex)

  int index_of(int g, int y) const {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == std::make_pair(g, y)) return int(i);
    throw std::invalid_argument("coend: no such pair");
  }
};

inline CoendCategory build_coend(const PosetFunctor& f, int apex, CoendVariant variant) {
  const Finite2Category& cat = f.category();
  if (apex < 0 || std::size_t(apex) >= cat.num_objects())
    throw std::invalid_argument("build_coend: unknown object");
  CoendCategory c;
  c.apex = apex;
  c.variant = variant;
  for (int g : cat.morphisms_into(apex))
    for (std::size_t y = 0; y < f.value_count(cat.source(g)); ++y)
      c.elems.emplace_back(g, int(y));
  const std::size_t n = c.elems.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [g, y] = c.elems[i];
    names[i] = "(" + cat.morphism(g).name + "," + f.value_name(cat.source(g), y) + ")";
    for (std::size_t j = 0; j < n; ++j)
      leq[i][j] = detail::coend_pair_leq(f, variant, c.elems[i], c.elems[j]);
    c.counit.push_back(f.apply(g, y));
  }
  c.order = std::make_shared<FinitePreorder>(std::move(names), std::move(leq));
  return c;
}

/// The whole coend functor for one variant: objectwise pair constructions,
/// with morphism actions (g, y) |-> (f.g, y), packaged as a PosetFunctor so
/// the rest of the engine applies unchanged.
class CoendFunctor {
 public:
  CoendFunctor(const PosetFunctor& f, CoendVariant variant) : base_(&f), variant_(variant) {
    const Finite2Category& cat = f.category();
    data_.reserve(cat.num_objects());
    std::vector<std::shared_ptr<const FinitePreorder>> objects;
    for (std::size_t a = 0; a < cat.num_objects(); ++a) {
      data_.push_back(build_coend(f, int(a), variant));
      objects.push_back(data_.back().order);
    }
    std::vector<MonotoneMap> actions;
    for (std::size_t m = 0; m < cat.num_morphisms(); ++m) {
      const CoendCategory& src = data_[cat.source(int(m))];
      const CoendCategory& dst = data_[cat.target(int(m))];
      std::vector<int> table(src.elems.size());
      for (std::size_t i = 0; i < src.elems.size(); ++i) {
        auto [g, y] = src.elems[i];
        table[i] = dst.index_of(cat.compose(int(m), g), y);
      }
      actions.emplace_back(objects[cat.source(int(m))], objects[cat.target(int(m))],
                           std::move(table));
    }
    fun_ = PosetFunctor(f.category_ptr(), std::move(objects), std::move(actions));
  }

  const PosetFunctor& functor() const { return fun_; }
  const PosetFunctor& base() const { return *base_; }
  CoendVariant variant() const { return variant_; }
  const CoendCategory& at(int a) const { return data_.at(a); }

  /// The counit as a strict transformation from the coend functor to F.
  Transformation<PosetFunctor> counit_transformation() const {
    std::vector<std::vector<int>> comp;
    comp.reserve(data_.size());
    for (const auto& c : data_) comp.push_back(c.counit);
    return Transformation<PosetFunctor>(&fun_, base_, std::move(comp));
  }

 private:
  const PosetFunctor* base_;
  CoendVariant variant_;
  std::vector<CoendCategory> data_;
  PosetFunctor fun_;
};

inline Kind coend_source_kind(CoendVariant v) {
  switch (v) {
    case CoendVariant::sharp: return Kind::lax;
    case CoendVariant::flat: return Kind::colax;
    default: return Kind::general;
  }
}

/// Realizes a lax (sharp) / colax (flat) / general (plain) transformation as
/// a strict transformation out of the coend functor:
/// tau_A(g: B -> A, y) = Gg(lambda_B(y)).
template <class GB>
Transformation<GB> to_coend_transformation(const CoendFunctor& cf, const Transformation<GB>& t,
                                           const MorphismClass& sigma) {
  if (!is_kind(t, sigma, coend_source_kind(cf.variant())))
    throw std::invalid_argument(std::string("to_coend_transformation: input is not ") +
                                kind_name(coend_source_kind(cf.variant())));
  const Finite2Category& cat = t.category();
  const GB& g = t.value_functor();
  std::vector<std::vector<typename GB::Value>> comp(cat.num_objects());
  for (std::size_t a = 0; a < cat.num_objects(); ++a) {
    const CoendCategory& c = cf.at(int(a));
    comp[a].reserve(c.elems.size());
    for (auto [mor, y] : c.elems) comp[a].push_back(g.apply(mor, t.at(cat.source(mor), y)));
  }
  return Transformation<GB>(&cf.functor(), &g, std::move(comp));
}

/// Inverse of the realization: lambda_A(x) = tau_A(1_A, x).
template <class GB>
Transformation<GB> from_coend_transformation(const CoendFunctor& cf, const Transformation<GB>& tau,
                                             const MorphismClass& sigma) {
  if (!is_kind(tau, sigma, Kind::strict))
    throw std::invalid_argument("from_coend_transformation: input is not strict");
  const Finite2Category& cat = tau.category();
  const GB& g = tau.value_functor();
  std::vector<std::vector<typename GB::Value>> comp(cat.num_objects());
  for (std::size_t a = 0; a < cat.num_objects(); ++a) {
    const CoendCategory& c = cf.at(int(a));
    for (std::size_t x = 0; x < cf.base().value_count(int(a)); ++x)
      comp[a].push_back(tau.at(int(a), c.index_of(cat.identity(int(a)), int(x))));
  }
  return Transformation<GB>(&cf.base(), &g, std::move(comp));
}

}  // namespace kanmeasure
