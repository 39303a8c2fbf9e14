#pragma once

#include <memory>
#include <random>
#include <vector>

#include "kan.hpp"
#include "lattice_ops.hpp"

namespace kanmeasure {
namespace gen {

inline std::shared_ptr<const FiniteLattice> pick_lattice(std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return std::make_shared<const FiniteLattice>(FiniteLattice::chain(2));
    case 1: return std::make_shared<const FiniteLattice>(FiniteLattice::chain(3));
    case 2: return std::make_shared<const FiniteLattice>(FiniteLattice::diamond());
    default: return std::make_shared<const FiniteLattice>(FiniteLattice::powerset(2));
  }
}

inline std::shared_ptr<const FinitePoset> pick_poset(std::mt19937_64& rng, int max_size) {
  std::uniform_int_distribution<int> size_d(1, max_size), coin(0, 2);
  int n = size_d(rng);
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) == 0) covers.emplace_back(i, j);
  return std::make_shared<const FinitePoset>(FinitePoset::from_covers(std::size_t(n), covers));
}

/// The preorder viewed as a category: one morphism x -> y per related pair,
/// with trivial hom-posets.
inline std::shared_ptr<const Finite2Category> poset_category(const FinitePreorder& p) {
  std::vector<std::string> objects;
  std::vector<Finite2Category::Morphism> mors;
  std::vector<std::vector<int>> mor_id(p.size(), std::vector<int>(p.size(), -1));
  for (std::size_t x = 0; x < p.size(); ++x) objects.push_back(p.name(int(x)));
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(int(x), int(y))) {
        mor_id[x][y] = int(mors.size());
        mors.push_back({p.name(int(x)) + "<=" + p.name(int(y)), int(x), int(y)});
      }
  std::vector<int> ids(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) ids[x] = mor_id[x][x];
  std::vector<std::vector<int>> comp(mors.size(), std::vector<int>(mors.size(), -1));
  for (std::size_t g = 0; g < mors.size(); ++g)
    for (std::size_t f = 0; f < mors.size(); ++f)
      if (mors[g].src == mors[f].dst) comp[g][f] = mor_id[mors[f].src][mors[g].dst];
  std::vector<std::vector<char>> cells(mors.size(), std::vector<char>(mors.size(), 0));
  for (std::size_t f = 0; f < mors.size(); ++f) cells[f][f] = 1;
  return std::make_shared<const Finite2Category>(std::move(objects), std::move(mors),
                                                 std::move(ids), std::move(comp),
                                                 std::move(cells));
}

/// Every object carries the same poset, every morphism the identity.
inline PosetFunctor constant_functor(std::shared_ptr<const Finite2Category> cat,
                                     std::shared_ptr<const FinitePreorder> value) {
  std::vector<std::shared_ptr<const FinitePreorder>> objects(cat->num_objects(), value);
  std::vector<MonotoneMap> actions(cat->num_morphisms(), MonotoneMap::identity(value));
  return PosetFunctor(std::move(cat), std::move(objects), std::move(actions));
}

/// Every object carries the same carrier; the arrow x -> y acts by the
/// endomap iterated rank(y) - rank(x) times. Rank differences are additive
/// along composition, so functoriality is automatic.
inline PosetFunctor graded_power_functor(std::shared_ptr<const Finite2Category> cat,
                                         const std::vector<int>& rank,
                                         std::shared_ptr<const FinitePreorder> carrier,
                                         const MonotoneMap& endo) {
  std::vector<std::shared_ptr<const FinitePreorder>> objects(cat->num_objects(), carrier);
  std::vector<MonotoneMap> actions;
  for (std::size_t m = 0; m < cat->num_morphisms(); ++m) {
    int d = rank[cat->target(int(m))] - rank[cat->source(int(m))];
    MonotoneMap acc = MonotoneMap::identity(carrier);
    for (int i = 0; i < d; ++i) acc = compose(endo, acc);
    actions.push_back(std::move(acc));
  }
  return PosetFunctor(std::move(cat), std::move(objects), std::move(actions));
}

inline std::vector<int> height_rank(const FinitePreorder& p) {
  std::vector<int> rank(p.size(), 0);
  for (int x : p.linear_extension())
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(int(y), x) && int(y) != x) rank[x] = std::max(rank[x], rank[y] + 1);
  return rank;
}

/// A random order-automorphism where the carrier has one, else the identity.
inline MonotoneMap random_automorphism(std::mt19937_64& rng,
                                       const std::shared_ptr<const FiniteLattice>& l) {
  std::vector<std::vector<int>> autos{{}};
  autos[0].resize(l->size());
  for (std::size_t i = 0; i < l->size(); ++i) autos[0][i] = int(i);
  if (l->size() == 4) {
    // diamond and the two-atom powerset both swap their middle layer
    std::vector<int> swapped{0, 2, 1, 3};
    bool ok = true;
    for (std::size_t x = 0; x < 4 && ok; ++x)
      for (std::size_t y = 0; y < 4 && ok; ++y)
        if (l->leq(int(x), int(y)) != l->leq(swapped[x], swapped[y])) ok = false;
    if (ok) autos.push_back(swapped);
  }
  std::uniform_int_distribution<std::size_t> pick(0, autos.size() - 1);
  return MonotoneMap(l, l, autos[pick(rng)]);
}

/// Instance family on which the closure-formula hypotheses provably hold:
/// the category is a finite lattice (wide pullbacks are meets), the source
/// functor is constant (preserved limits, weakly final equality slices), and
/// the value functor is powered by an automorphism so that every action
/// preserves joins and meets.
struct StrictnessInstance {
  std::shared_ptr<const Finite2Category> cat;
  PosetFunctor f, g;
  MorphismClass sigma;
};

inline StrictnessInstance random_strictness_instance(std::mt19937_64& rng) {
  StrictnessInstance inst;
  auto shape = pick_lattice(rng);
  inst.cat = poset_category(*shape);
  auto fp = std::make_shared<const FiniteLattice>(FiniteLattice::chain(2));
  inst.f = constant_functor(inst.cat, fp);
  auto carrier = pick_lattice(rng);
  inst.g = graded_power_functor(inst.cat, height_rank(*shape), carrier,
                                random_automorphism(rng, carrier));
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<int> members;
  for (std::size_t m = 0; m < inst.cat->num_morphisms(); ++m)
    if (coin(rng) == 0) members.push_back(int(m));
  inst.sigma = MorphismClass(*inst.cat, members);
  return inst;
}

/// Instance family for extension checks: an order-embedding leg obtained by
/// enlarging the source functor objectwise (new top, new bottom, disjoint
/// extra part, or nothing).
struct EmbeddingInstance {
  std::shared_ptr<const Finite2Category> cat;
  PosetFunctor f, h, g;
  std::vector<std::vector<int>> iota_components;
  MorphismClass sigma;

  Transformation<PosetFunctor> iota() const {
    return Transformation<PosetFunctor>(&f, &h, iota_components);
  }
};

inline EmbeddingInstance random_embedding_instance(std::mt19937_64& rng) {
  EmbeddingInstance inst;
  auto shape = pick_poset(rng, 3);
  inst.cat = poset_category(*shape);
  std::vector<int> rank = height_rank(*shape);

  auto fp = pick_lattice(rng);
  inst.f = graded_power_functor(inst.cat, rank, fp, random_automorphism(rng, fp));
  auto gp = pick_lattice(rng);
  inst.g = graded_power_functor(inst.cat, rank, gp, random_automorphism(rng, gp));

  const std::size_t n = fp->size();
  std::uniform_int_distribution<int> mode_d(0, 3);
  int mode = mode_d(rng);
  if (mode == 0) {  // identity leg
    inst.h = inst.f;
  } else {
    // extend the carrier: old elements keep their indices
    std::vector<std::vector<char>> leq(n + 1, std::vector<char>(n + 1, 0));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(fp->name(int(i)));
      for (std::size_t j = 0; j < n; ++j) leq[i][j] = fp->leq(int(i), int(j));
    }
    names.push_back("+");
    leq[n][n] = 1;
    if (mode == 1)  // new top
      for (std::size_t i = 0; i < n; ++i) leq[i][n] = 1;
    if (mode == 2)  // new bottom
      for (std::size_t i = 0; i < n; ++i) leq[n][i] = 1;
    auto hp = std::make_shared<const FinitePoset>(std::move(names), std::move(leq));
    std::vector<std::shared_ptr<const FinitePreorder>> objects(inst.cat->num_objects(), hp);
    std::vector<MonotoneMap> actions;
    for (std::size_t m = 0; m < inst.cat->num_morphisms(); ++m) {
      std::vector<int> table(n + 1);
      for (std::size_t x = 0; x < n; ++x) table[x] = inst.f.action(int(m))(int(x));
      table[n] = int(n);  // the added element is fixed by every action
      actions.emplace_back(hp, hp, std::move(table));
    }
    inst.h = PosetFunctor(inst.cat, std::move(objects), std::move(actions));
  }

  inst.iota_components.assign(inst.cat->num_objects(), {});
  for (auto& comp : inst.iota_components) {
    comp.resize(n);
    for (std::size_t x = 0; x < n; ++x) comp[x] = int(x);
  }
  inst.sigma = MorphismClass::empty(*inst.cat);
  return inst;
}

}  // namespace gen
}  // namespace kanmeasure
