#pragma once

#include <optional>
#include <string>
#include <vector>

#include "functor.hpp"
#include "two_category.hpp"

namespace kanmeasure {

/// Location of a violated (in)equality: a morphism and a source element,
/// with both sides rendered for reporting.
struct Witness {
  int morphism = -1;
  int element = -1;
  std::string detail;
};

/// Outcome of classifying a transformation: which of the four kinds it
/// belongs to, with one witness per failed kind. strict = lax and colax.
struct KindReport {
  bool is_general = false;
  bool is_lax = false;
  bool is_colax = false;
  bool is_strict = false;
  std::optional<Witness> sigma_witness;
  std::optional<Witness> lax_witness;
  std::optional<Witness> colax_witness;
};

enum class Kind { general, lax, colax, strict };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::general: return "general";
    case Kind::lax: return "lax";
    case Kind::colax: return "colax";
    default: return "strict";
  }
}

/// Family of monotone component maps FA -> GA, one per object, stored as
/// value tables indexed by the source element. The source functor is always
/// finite; the value side is either a PosetFunctor or a formula-only backend.
/// Component monotonicity is enforced here; the equality law on a morphism
/// class is a property established by `classify`.
template <class GB>
class Transformation {
 public:
  using Value = typename GB::Value;

  Transformation() = default;

  Transformation(const PosetFunctor* f, const GB* g, std::vector<std::vector<Value>> components)
      : f_(f), g_(g), comp_(std::move(components)) {
    const Finite2Category& cat = f_->category();
    if (comp_.size() != cat.num_objects())
      throw std::invalid_argument("transformation: component missing for some object");
    for (std::size_t a = 0; a < comp_.size(); ++a) {
      const FinitePreorder& fa = f_->poset(int(a));
      if (comp_[a].size() != fa.size())
        throw std::invalid_argument("transformation: component table size mismatch at " +
                                    cat.object_name(int(a)));
      for (std::size_t x = 0; x < fa.size(); ++x)
        for (std::size_t y = 0; y < fa.size(); ++y)
          if (fa.leq(int(x), int(y)) && !g_->leq(int(a), comp_[a][x], comp_[a][y]))
            throw std::invalid_argument("transformation: non-monotone component at " +
                                        cat.object_name(int(a)));
    }
  }

  const PosetFunctor& source() const { return *f_; }
  const GB& value_functor() const { return *g_; }
  const Finite2Category& category() const { return f_->category(); }

  const Value& at(int obj, int x) const { return comp_.at(obj).at(x); }
  const std::vector<std::vector<Value>>& components() const { return comp_; }

  friend bool operator==(const Transformation& a, const Transformation& b) {
    return a.comp_ == b.comp_;
  }

  /// Pointwise order on transformations.
  bool leq(const Transformation& o) const {
    for (std::size_t a = 0; a < comp_.size(); ++a)
      for (std::size_t x = 0; x < comp_[a].size(); ++x)
        if (!g_->leq(int(a), comp_[a][x], o.comp_[a][x])) return false;
    return true;
  }

 private:
  const PosetFunctor* f_ = nullptr;
  const GB* g_ = nullptr;
  std::vector<std::vector<Value>> comp_;
};

/// Exhaustive classification of a transformation against every morphism.
/// A failed equality on the given morphism class makes all four kinds false.
template <class GB>
KindReport classify(const Transformation<GB>& tau, const MorphismClass& sigma) {
  const Finite2Category& cat = tau.category();
  const PosetFunctor& f = tau.source();
  const GB& g = tau.value_functor();
  KindReport r;
  bool sigma_ok = true, lax_ok = true, colax_ok = true;
  for (std::size_t m = 0; m < cat.num_morphisms(); ++m) {
    int a = cat.source(int(m)), b = cat.target(int(m));
    for (std::size_t x = 0; x < f.value_count(a); ++x) {
      auto lhs = g.apply(int(m), tau.at(a, int(x)));        // Gf(tau_A(x))
      auto rhs = tau.at(b, f.apply(int(m), int(x)));        // tau_B(Ff(x))
      bool ge = g.leq(b, rhs, lhs), le = g.leq(b, lhs, rhs);
      auto witness = [&] {
        return Witness{int(m), int(x),
                       cat.morphism(int(m)).name + " at " + f.value_name(a, int(x)) + ": " +
                           g.value_name(b, lhs) + " vs " + g.value_name(b, rhs)};
      };
      if (sigma.contains(int(m)) && !(ge && le) && sigma_ok) {
        sigma_ok = false;
        r.sigma_witness = witness();
      }
      if (!ge && lax_ok) {
        lax_ok = false;
        r.lax_witness = witness();
      }
      if (!le && colax_ok) {
        colax_ok = false;
        r.colax_witness = witness();
      }
    }
  }
  r.is_general = sigma_ok;
  r.is_lax = sigma_ok && lax_ok;
  r.is_colax = sigma_ok && colax_ok;
  r.is_strict = r.is_lax && r.is_colax;
  return r;
}

template <class GB>
bool is_kind(const Transformation<GB>& tau, const MorphismClass& sigma, Kind k) {
  KindReport r = classify(tau, sigma);
  switch (k) {
    case Kind::general: return r.is_general;
    case Kind::lax: return r.is_lax;
    case Kind::colax: return r.is_colax;
    default: return r.is_strict;
  }
}

}  // namespace kanmeasure
