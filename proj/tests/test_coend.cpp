#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "kanmeasure/coend.hpp"
#include "kanmeasure/lattice_ops.hpp"

using namespace kanmeasure;
using fixtures::TwoObjectArrow;

TEST_CASE("pair construction on the terminal category") {
  auto cat = std::make_shared<Finite2Category>(Finite2Category::terminal());
  auto c2 = std::make_shared<FiniteLattice>(FiniteLattice::chain(2));
  PosetFunctor f(cat, {c2}, {MonotoneMap::identity(c2)});
  CoendCategory c = build_coend(f, 0, CoendVariant::sharp);
  REQUIRE(c.elems.size() == 2);
  int e0 = c.index_of(0, 0), e1 = c.index_of(0, 1);
  CHECK(c.order->leq(e0, e1));
  CHECK_FALSE(c.order->leq(e1, e0));
  CHECK(c.counit[e0] == 0);
  CHECK(c.counit[e1] == 1);
}

TEST_CASE("unknown object is rejected") {
  auto cat = std::make_shared<Finite2Category>(Finite2Category::terminal());
  auto c2 = std::make_shared<FiniteLattice>(FiniteLattice::chain(2));
  PosetFunctor f(cat, {c2}, {MonotoneMap::identity(c2)});
  CHECK_THROWS_AS(build_coend(f, 3, CoendVariant::sharp), std::invalid_argument);
}

TEST_CASE("sharp preorder at the arrow target, fully enumerated") {
  TwoObjectArrow t0;
  CoendCategory c = build_coend(t0.F, 1, CoendVariant::sharp);
  REQUIRE(c.elems.size() == 4);  // (id_B, 0/1), (f, 0/1)
  int idb = 1, f = t0.f_mor;
  auto leq = [&](int g1, int y1, int g2, int y2) {
    return c.order->leq(c.index_of(g1, y1), c.index_of(g2, y2));
  };
  // within a morphism: ordered by the element
  CHECK(leq(idb, 0, idb, 1));
  CHECK(leq(f, 0, f, 1));
  CHECK_FALSE(leq(idb, 1, idb, 0));
  // (id_B, y1) <= (f, y2) iff y1 <= y2, via s = f
  CHECK(leq(idb, 0, f, 0));
  CHECK(leq(idb, 1, f, 1));
  CHECK(leq(idb, 0, f, 1));
  CHECK_FALSE(leq(idb, 1, f, 0));
  // no morphism B -> A, so (f, y) never reaches (id_B, y')
  CHECK_FALSE(leq(f, 0, idb, 0));
  CHECK_FALSE(leq(f, 0, idb, 1));
  CHECK_FALSE(leq(f, 1, idb, 1));
}

TEST_CASE("counit is a strict transformation and inserts back to the identity") {
  TwoObjectArrow t0;
  CoendFunctor cf(t0.F, CoendVariant::sharp);
  auto counit = cf.counit_transformation();
  CHECK(classify(counit, t0.no_sigma).is_strict);
  // l'((1_A, x)) = x
  for (std::size_t a = 0; a < t0.cat->num_objects(); ++a)
    for (std::size_t x = 0; x < t0.F.value_count(int(a)); ++x) {
      int idx = cf.at(int(a)).index_of(t0.cat->identity(int(a)), int(x));
      CHECK(counit.at(int(a), idx) == int(x));
    }
}

TEST_CASE("transport round-trips are identities for every lax candidate") {
  TwoObjectArrow t0;
  CoendFunctor sharp(t0.F, CoendVariant::sharp);
  for (const auto& lam : enumerate_transformations(t0.F, t0.G, t0.no_sigma, Kind::lax)) {
    auto strictified = to_coend_transformation(sharp, lam, t0.no_sigma);
    CHECK(classify(strictified, t0.no_sigma).is_strict);
    CHECK(from_coend_transformation(sharp, strictified, t0.no_sigma) == lam);
  }
}

TEST_CASE("transport round-trips for colax and general candidates") {
  TwoObjectArrow t0;
  CoendFunctor flat(t0.F, CoendVariant::flat);
  for (const auto& sig : enumerate_transformations(t0.F, t0.G, t0.no_sigma, Kind::colax)) {
    auto strictified = to_coend_transformation(flat, sig, t0.no_sigma);
    CHECK(classify(strictified, t0.no_sigma).is_strict);
    CHECK(from_coend_transformation(flat, strictified, t0.no_sigma) == sig);
  }
  CoendFunctor plain(t0.F, CoendVariant::plain);
  for (const auto& tau : enumerate_transformations(t0.F, t0.G, t0.no_sigma)) {
    auto strictified = to_coend_transformation(plain, tau, t0.no_sigma);
    CHECK(classify(strictified, t0.no_sigma).is_strict);
    CHECK(from_coend_transformation(plain, strictified, t0.no_sigma) == tau);
  }
}

TEST_CASE("transport preserves and reflects the pointwise order") {
  TwoObjectArrow t0;
  CoendFunctor sharp(t0.F, CoendVariant::sharp);
  auto laxes = enumerate_transformations(t0.F, t0.G, t0.no_sigma, Kind::lax);
  for (const auto& a : laxes)
    for (const auto& b : laxes) {
      auto ta = to_coend_transformation(sharp, a, t0.no_sigma);
      auto tb = to_coend_transformation(sharp, b, t0.no_sigma);
      CHECK(a.leq(b) == ta.leq(tb));
    }
}

TEST_CASE("transport of the wrong kind is rejected") {
  TwoObjectArrow t0;
  CoendFunctor sharp(t0.F, CoendVariant::sharp);
  auto colax_only = t0.make({0, 0}, {0, 1});
  REQUIRE_FALSE(classify(colax_only, t0.no_sigma).is_lax);
  CHECK_THROWS_AS(to_coend_transformation(sharp, colax_only, t0.no_sigma), std::invalid_argument);
}
