#pragma once

#include <memory>
#include <vector>

#include "kanmeasure/functor.hpp"
#include "kanmeasure/transformation.hpp"

namespace kanmeasure::fixtures {

/// Two objects A, B with a single non-identity arrow f: A -> B; all four
/// value posets are the two-chain and every action is the identity.
struct TwoObjectArrow {
  std::shared_ptr<const Finite2Category> cat;
  std::shared_ptr<const FiniteLattice> chain2;
  PosetFunctor F, G;
  MorphismClass no_sigma;
  int f_mor = 2;

  TwoObjectArrow() {
    cat = std::make_shared<Finite2Category>(Finite2Category::from_parts(
        {"A", "B"},
        {{"id_A", 0, 0}, {"id_B", 1, 1}, {"f", 0, 1}},
        {{0, -1, -1}, {-1, 1, 2}, {2, -1, -1}}));
    chain2 = std::make_shared<FiniteLattice>(FiniteLattice::chain(2));
    auto make_fun = [&] {
      std::vector<std::shared_ptr<const FinitePreorder>> obs{chain2, chain2};
      std::vector<MonotoneMap> acts{MonotoneMap::identity(chain2), MonotoneMap::identity(chain2),
                                    MonotoneMap(chain2, chain2, {0, 1})};
      return PosetFunctor(cat, obs, acts);
    };
    F = make_fun();
    G = make_fun();
    no_sigma = MorphismClass::empty(*cat);
  }

  Transformation<PosetFunctor> make(std::vector<int> comp_a, std::vector<int> comp_b) const {
    return Transformation<PosetFunctor>(&F, &G, {std::move(comp_a), std::move(comp_b)});
  }
};

/// Single object; F* the two-chain, H* and G* the three-chain;
/// iota(0)=0, iota(1)=2 and tau(0)=0, tau(1)=2.
struct SingleObjectEmbedding {
  std::shared_ptr<const Finite2Category> cat;
  std::shared_ptr<const FiniteLattice> chain2, chain3;
  PosetFunctor F, H, G;
  MorphismClass no_sigma;

  SingleObjectEmbedding() {
    cat = std::make_shared<Finite2Category>(Finite2Category::terminal());
    chain2 = std::make_shared<FiniteLattice>(FiniteLattice::chain(2));
    chain3 = std::make_shared<FiniteLattice>(FiniteLattice::chain(3));
    F = PosetFunctor(cat, {chain2}, {MonotoneMap::identity(chain2)});
    H = PosetFunctor(cat, {chain3}, {MonotoneMap::identity(chain3)});
    G = PosetFunctor(cat, {chain3}, {MonotoneMap::identity(chain3)});
    no_sigma = MorphismClass::empty(*cat);
  }

  Transformation<PosetFunctor> iota() const { return Transformation<PosetFunctor>(&F, &H, {{0, 2}}); }
  Transformation<PosetFunctor> tau() const { return Transformation<PosetFunctor>(&F, &G, {{0, 2}}); }
};

}  // namespace kanmeasure::fixtures
