#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "order.hpp"
#include "two_category.hpp"

namespace kanmeasure {

/// Strict 2-functor into finite posets: an object assignment plus a monotone
/// map per morphism. Identities, composition and 2-cell monotonicity are
/// validated on construction. Serves as the enumerable value backend: the
/// element type is the index into the object's poset.
class PosetFunctor {
 public:
  using Value = int;
  static constexpr bool enumerable = true;

  PosetFunctor() = default;

  PosetFunctor(std::shared_ptr<const Finite2Category> cat,
               std::vector<std::shared_ptr<const FinitePreorder>> objects,
               std::vector<MonotoneMap> actions)
      : cat_(std::move(cat)), obj_(std::move(objects)), act_(std::move(actions)) {
    if (obj_.size() != cat_->num_objects() || act_.size() != cat_->num_morphisms())
      throw std::invalid_argument("functor: assignment size mismatch");
    for (std::size_t f = 0; f < act_.size(); ++f) {
      if (act_[f].source().get() != obj_[cat_->source(int(f))].get() ||
          act_[f].target().get() != obj_[cat_->target(int(f))].get())
        throw std::invalid_argument("functor: action endpoints mismatch at " +
                                    cat_->morphism(int(f)).name);
    }
    for (std::size_t a = 0; a < obj_.size(); ++a) {
      const auto& t = act_[cat_->identity(int(a))].table();
      for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] != int(i)) throw std::invalid_argument("functor: identity not preserved");
    }
    for (std::size_t g = 0; g < act_.size(); ++g)
      for (std::size_t f = 0; f < act_.size(); ++f) {
        if (!cat_->composable(int(g), int(f))) continue;
        const auto& tg = act_[g].table();
        const auto& tf = act_[f].table();
        const auto& tc = act_[cat_->compose(int(g), int(f))].table();
        for (std::size_t x = 0; x < tf.size(); ++x)
          if (tc[x] != tg[tf[x]])
            throw std::invalid_argument("functor: composition not preserved");
      }
    for (std::size_t f = 0; f < act_.size(); ++f)
      for (std::size_t g = 0; g < act_.size(); ++g)
        if (f != g && cat_->leq2(int(f), int(g)) && !act_[f].pointwise_leq(act_[g]))
          throw std::invalid_argument("functor: 2-cell not preserved between " +
                                      cat_->morphism(int(f)).name + " and " +
                                      cat_->morphism(int(g)).name);
  }

  const Finite2Category& category() const { return *cat_; }
  const std::shared_ptr<const Finite2Category>& category_ptr() const { return cat_; }
  const FinitePreorder& poset(int a) const { return *obj_.at(a); }
  const std::shared_ptr<const FinitePreorder>& poset_ptr(int a) const { return obj_.at(a); }
  const MonotoneMap& action(int f) const { return act_.at(f); }

  /// The object's lattice structure, or null when it is a bare poset.
  const FiniteLattice* lattice(int a) const {
    return dynamic_cast<const FiniteLattice*>(obj_.at(a).get());
  }
  const FiniteLattice& lattice_or_throw(int a) const {
    const FiniteLattice* l = lattice(a);
    if (!l)
      throw std::invalid_argument("value object at " + cat_->object_name(a) + " is not a lattice");
    return *l;
  }

  // --- value backend interface ---
  std::size_t value_count(int a) const { return obj_.at(a)->size(); }
  bool leq(int a, Value x, Value y) const { return obj_.at(a)->leq(x, y); }
  Value apply(int f, Value x) const { return act_.at(f)(x); }
  Value sup(int a, const std::vector<Value>& vs) const { return lattice_or_throw(a).join_of(vs); }
  Value inf(int a, const std::vector<Value>& vs) const { return lattice_or_throw(a).meet_of(vs); }
  bool preserves_joins_on(int f) const {
    return preserves_joins(act_.at(f), lattice_or_throw(cat_->source(f)),
                           lattice_or_throw(cat_->target(f)));
  }
  bool preserves_meets_on(int f) const {
    return preserves_meets(act_.at(f), lattice_or_throw(cat_->source(f)),
                           lattice_or_throw(cat_->target(f)));
  }
  std::string value_name(int a, Value x) const { return obj_.at(a)->name(x); }
  std::string directed_joins_note() const {
    return "finite carrier: directed subsets have maxima, preserved by monotone maps";
  }

 private:
  std::shared_ptr<const Finite2Category> cat_;
  std::vector<std::shared_ptr<const FinitePreorder>> obj_;
  std::vector<MonotoneMap> act_;
};

}  // namespace kanmeasure
