#include <catch2/catch_amalgamated.hpp>

#include "kanmeasure/measure_crosscheck.hpp"

using namespace kanmeasure;

namespace {

std::shared_ptr<const SetAlgebra> full_three() {
  return std::make_shared<SetAlgebra>(generate_algebra(3, {{0}, {1}, {2}}));
}

ExtValue q(long n, long d = 1) { return ExtValue(Rational(n, d)); }

MeasureTable by_size(std::shared_ptr<const SetAlgebra> alg, ExtValue v1, ExtValue v2, ExtValue v3,
                     MeasureKind kind) {
  std::vector<ExtValue> vals(8);
  for (SetAlgebra::Mask m = 1; m < 8; ++m) {
    int pc = __builtin_popcount(m);
    vals[m] = pc == 1 ? v1 : pc == 2 ? v2 : v3;
  }
  return MeasureTable(std::move(alg), std::move(vals), kind);
}

}  // namespace

TEST_CASE("index category of partial maps validates and carries the right class") {
  IndexCategory ic(IndexVariant::partial, 2);
  const Finite2Category& cat = ic.category();
  CHECK(cat.num_objects() == 3);
  // maps a -> b counted as (b+1)^a
  std::size_t expected = 0;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      std::size_t h = 1;
      for (int i = 0; i < a; ++i) h *= std::size_t(b + 1);
      expected += h;
    }
  CHECK(cat.num_morphisms() == expected);
  for (int f : ic.sigma().members()) CHECK(ic.map_of(f).injective());
}

TEST_CASE("counting measure encodes to a strict transformation in both variants") {
  auto alg = full_three();
  MeasureTable c = by_size(alg, q(1), q(2), q(3), MeasureKind::premeasure);
  for (IndexVariant v : {IndexVariant::partial, IndexVariant::total}) {
    const MeasureEncoding& enc = MeasureEncoding::shared(3, v, 3);
    auto t = enc.encode_checked(c);
    CHECK(is_kind(t, enc.sigma(), Kind::strict));
    CHECK(enc.decode(t, MeasureKind::premeasure, alg) == c);
  }
}

TEST_CASE("the all-ones outer table encodes lax, not colax") {
  auto alg = full_three();
  MeasureTable mu1 = by_size(alg, q(1), q(1), q(1), MeasureKind::outer);
  const MeasureEncoding& enc = MeasureEncoding::shared(3, IndexVariant::partial, 3);
  KindReport k = classify(enc.encode(mu1), enc.sigma());
  CHECK(k.is_general);
  CHECK(k.is_lax);
  CHECK_FALSE(k.is_colax);
}

TEST_CASE("the 1/3/5 inner table encodes colax, not lax") {
  auto alg = full_three();
  MeasureTable mu2 = by_size(alg, q(1), q(3), q(5), MeasureKind::inner);
  const MeasureEncoding& enc = MeasureEncoding::shared(3, IndexVariant::partial, 3);
  KindReport k = classify(enc.encode(mu2), enc.sigma());
  CHECK(k.is_colax);
  CHECK_FALSE(k.is_lax);
}

TEST_CASE("a declared-kind mismatch is rejected") {
  auto alg = full_three();
  MeasureTable mu1 = by_size(alg, q(1), q(1), q(1), MeasureKind::outer);
  const MeasureEncoding& enc = MeasureEncoding::shared(3, IndexVariant::partial, 3);
  CHECK_THROWS_AS(enc.encode_checked(mu1.with_kind(MeasureKind::premeasure)),
                  std::invalid_argument);
}

TEST_CASE("decode inverts encode on random tables of every kind") {
  std::mt19937_64 rng(101);
  const MeasureKind kinds[] = {MeasureKind::premeasure, MeasureKind::outer, MeasureKind::inner,
                               MeasureKind::general};
  for (int trial = 0; trial < 100; ++trial) {
    auto alg = gen::random_algebra(rng, 3);
    MeasureTable m = gen::random_table_of_kind(rng, alg, kinds[trial % 4]);
    const MeasureEncoding& enc = MeasureEncoding::shared(
        alg->atom_count(), IndexVariant::partial, std::max<std::size_t>(2, alg->atom_count()));
    CHECK(enc.decode(enc.encode(m), m.declared_kind(), alg) == m);
  }
}

TEST_CASE("encoding preserves and reflects the pointwise order") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto alg = gen::random_algebra(rng, 3);
    const MeasureEncoding& enc = MeasureEncoding::shared(
        alg->atom_count(), IndexVariant::partial, std::max<std::size_t>(2, alg->atom_count()));
    MeasureTable a = gen::random_outer(rng, alg), b = gen::random_outer(rng, alg);
    CHECK(a.leq(b) == enc.encode(a).leq(enc.encode(b)));
    CHECK(b.leq(a) == enc.encode(b).leq(enc.encode(a)));
  }
}

TEST_CASE("engine crosscheck on the named tables") {
  auto alg = full_three();
  SECTION("outer: sup formula matches the least premeasure above") {
    auto rep = engine_crosscheck(by_size(alg, q(1), q(1), q(1), MeasureKind::outer));
    CHECK(rep.passed());
  }
  SECTION("inner: inf formula matches the greatest premeasure below") {
    auto rep = engine_crosscheck(by_size(alg, q(1), q(3), q(5), MeasureKind::inner));
    CHECK(rep.passed());
  }
  SECTION("premeasure: both closures are identities") {
    auto rep = engine_crosscheck(by_size(alg, q(1), q(2), q(3), MeasureKind::premeasure));
    CHECK(rep.passed());
  }
}

TEST_CASE("engine crosscheck on the two-point general table with nonzero empty value") {
  auto alg = std::make_shared<SetAlgebra>(generate_algebra(2, {{0}, {1}}));
  std::vector<ExtValue> vals{q(1), q(2), q(2), q(5)};
  MeasureTable sigma(alg, std::move(vals), MeasureKind::general);
  auto rep = engine_crosscheck(sigma);
  CHECK(rep.passed());
}

TEST_CASE("size guard rejects big algebras") {
  std::mt19937_64 rng(3);
  auto alg = std::make_shared<SetAlgebra>(generate_algebra(4, {{0}, {1}, {2}, {3}}));
  CHECK_THROWS_AS(engine_crosscheck(gen::random_outer(rng, alg)), std::invalid_argument);
}

TEST_CASE("join through the engine agrees with the closed form") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 5; ++trial) {
    auto alg = gen::random_algebra(rng, 3);
    std::vector<MeasureTable> family{gen::random_premeasure(rng, alg),
                                     gen::random_premeasure(rng, alg)};
    CHECK(crosscheck_join(family));
  }
}
