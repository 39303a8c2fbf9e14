#include <catch2/catch_amalgamated.hpp>

#include <optional>

#include "kanmeasure/generate.hpp"
#include "kanmeasure/measure_table.hpp"

using namespace kanmeasure;

namespace {

std::shared_ptr<const SetAlgebra> full_three() {
  return std::make_shared<SetAlgebra>(generate_algebra(3, {{0}, {1}, {2}}));
}

ExtValue q(long n, long d = 1) { return ExtValue(Rational(n, d)); }

// value by popcount: singletons -> v1, pairs -> v2, full -> v3
MeasureTable by_size(std::shared_ptr<const SetAlgebra> alg, ExtValue v1, ExtValue v2, ExtValue v3,
                     MeasureKind kind) {
  std::vector<ExtValue> vals(8);
  for (SetAlgebra::Mask m = 1; m < 8; ++m) {
    int pc = __builtin_popcount(m);
    vals[m] = pc == 1 ? v1 : pc == 2 ? v2 : v3;
  }
  return MeasureTable(std::move(alg), std::move(vals), kind);
}

MeasureTable counting(std::shared_ptr<const SetAlgebra> alg) {
  return by_size(std::move(alg), q(1), q(2), q(3), MeasureKind::premeasure);
}

// Oracle: sup over disjoint families contained in B (partitions of subsets).
ExtValue brute_sup_inside(const MeasureTable& m, SetAlgebra::Mask b) {
  const SetAlgebra& alg = m.algebra();
  ExtValue best;  // empty family contributes 0
  for (SetAlgebra::Mask s = 0; s < alg.element_count(); ++s) {
    if (!SetAlgebra::subset(s, b)) continue;
    for_each_disjoint_partition(alg, s, [&](const std::vector<SetAlgebra::Mask>& blocks) {
      ExtValue sum;
      for (auto bl : blocks) sum += m.value(bl);
      best = max(best, sum);
    });
  }
  return best;
}

// Oracle: inf over disjoint families covering B (partitions of supersets).
ExtValue brute_inf_covering(const MeasureTable& m, SetAlgebra::Mask b) {
  const SetAlgebra& alg = m.algebra();
  std::optional<ExtValue> best;
  if (b == 0) best = ExtValue();  // the empty family covers the empty set
  for (SetAlgebra::Mask u = 0; u < alg.element_count(); ++u) {
    if (!SetAlgebra::subset(b, u)) continue;
    for_each_disjoint_partition(alg, u, [&](const std::vector<SetAlgebra::Mask>& blocks) {
      if (u == 0 && b == 0 && blocks.empty()) return;  // already counted
      ExtValue sum;
      for (auto bl : blocks) sum += m.value(bl);
      if (!best || sum < *best) best = sum;
    });
  }
  return *best;
}

}  // namespace

TEST_CASE("kind validation on the three-point instance") {
  auto alg = full_three();
  SECTION("all-ones table is outer but not a premeasure") {
    MeasureTable mu1 = by_size(alg, q(1), q(1), q(1), MeasureKind::outer);
    auto rep = validate_measure_kind(mu1);
    CHECK(rep.outer);
    CHECK_FALSE(rep.premeasure);
    CHECK(rep.additive_witness.has_value());
  }
  SECTION("counting table is a premeasure") {
    auto rep = validate_measure_kind(counting(alg));
    CHECK(rep.premeasure);
    CHECK(rep.outer);
    CHECK(rep.inner);
  }
  SECTION("1/3/5 table is inner but not outer") {
    MeasureTable mu2 = by_size(alg, q(1), q(3), q(5), MeasureKind::inner);
    auto rep = validate_measure_kind(mu2);
    CHECK(rep.inner);
    CHECK_FALSE(rep.outer);
    CHECK(rep.subadditive_witness.has_value());
  }
}

TEST_CASE("empty set must carry zero for the declared kinds") {
  auto alg = full_three();
  std::vector<ExtValue> vals(8, q(1));
  CHECK_THROWS_AS(MeasureTable(alg, vals, MeasureKind::outer), std::invalid_argument);
  CHECK_NOTHROW(MeasureTable(alg, vals, MeasureKind::general));
}

TEST_CASE("least premeasure above the all-ones outer table") {
  auto alg = full_three();
  MeasureTable mu1 = by_size(alg, q(1), q(1), q(1), MeasureKind::outer);
  MeasureTable up = least_premeasure_above(mu1);
  CHECK(up.value(alg->full_mask()) == q(3));
  CHECK(up.value(alg->mask_of({0, 1})) == q(2));
  CHECK(up.value(alg->mask_of({0})) == q(1));
  CHECK(validate_measure_kind(up).premeasure);
  for (SetAlgebra::Mask b = 0; b < 8; ++b) CHECK(up.value(b) == brute_sup_inside(mu1, b));
}

TEST_CASE("a premeasure is already closed; an all-infinite outer stays put") {
  auto alg = full_three();
  MeasureTable c = counting(alg);
  CHECK(least_premeasure_above(c.with_kind(MeasureKind::outer)) == c);
  MeasureTable inf_t = by_size(alg, ExtValue::infinity(), ExtValue::infinity(),
                               ExtValue::infinity(), MeasureKind::outer);
  CHECK(least_premeasure_above(inf_t) == inf_t);
}

TEST_CASE("greatest premeasure below the 1/3/5 inner table") {
  auto alg = full_three();
  MeasureTable mu2 = by_size(alg, q(1), q(3), q(5), MeasureKind::inner);
  MeasureTable down = greatest_premeasure_below(mu2);
  CHECK(down.value(alg->full_mask()) == q(3));
  CHECK(down.value(alg->mask_of({0, 1})) == q(2));
  CHECK(down.value(alg->mask_of({2})) == q(1));
  CHECK(validate_measure_kind(down).premeasure);
  for (SetAlgebra::Mask b = 0; b < 8; ++b) CHECK(down.value(b) == brute_inf_covering(mu2, b));
  CHECK(greatest_premeasure_below(counting(alg).with_kind(MeasureKind::inner)) == counting(alg));
  MeasureTable zero(alg, std::vector<ExtValue>(8), MeasureKind::inner);
  CHECK(greatest_premeasure_below(zero) == zero);
}

TEST_CASE("kind preconditions are enforced") {
  auto alg = full_three();
  MeasureTable mu2 = by_size(alg, q(1), q(3), q(5), MeasureKind::inner);
  CHECK_THROWS_AS(least_premeasure_above(mu2), std::invalid_argument);
  MeasureTable mu1 = by_size(alg, q(1), q(1), q(1), MeasureKind::outer);
  CHECK_THROWS_AS(greatest_premeasure_below(mu1), std::invalid_argument);
}

TEST_CASE("join of two point masses") {
  auto alg = full_three();
  auto point_mass = [&](int pt) {
    SetAlgebra::Mask bit = alg->mask_of({pt});
    std::vector<ExtValue> vals(8);
    for (SetAlgebra::Mask m = 0; m < 8; ++m)
      if (SetAlgebra::subset(bit, m)) vals[m] = q(1);
    return MeasureTable(alg, std::move(vals), MeasureKind::premeasure);
  };
  MeasureTable d0 = point_mass(0), d1 = point_mass(1);
  MeasureTable j = join_premeasures({d0, d1});
  CHECK(j.value(alg->mask_of({0, 1})) == q(2));
  CHECK(j.value(alg->full_mask()) == q(2));
  CHECK(j.value(alg->mask_of({2})) == q(0));
  CHECK(validate_measure_kind(j).premeasure);
  CHECK(join_premeasures({d0}) == d0);
  CHECK(join_premeasures({d0, d0}) == d0);
}

TEST_CASE("join is the least premeasure upper bound (grid oracle)") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    auto alg = gen::random_algebra(rng, 3);
    MeasureTable a = gen::random_premeasure(rng, alg), b = gen::random_premeasure(rng, alg);
    MeasureTable j = join_premeasures({a, b});
    CHECK(a.leq(j));
    CHECK(b.leq(j));
    // oracle: atom-value grid drawn from both inputs' atom values
    std::vector<std::vector<ExtValue>> choices;
    for (std::size_t t = 0; t < alg->atom_count(); ++t) {
      SetAlgebra::Mask atom = SetAlgebra::Mask(1) << t;
      choices.push_back({a.value(atom), b.value(atom), a.value(atom) + b.value(atom)});
    }
    std::vector<std::size_t> pick(alg->atom_count(), 0);
    while (true) {
      std::vector<ExtValue> vals(alg->element_count());
      for (SetAlgebra::Mask m = 0; m < alg->element_count(); ++m)
        for (std::size_t t = 0; t < alg->atom_count(); ++t)
          if (m & (SetAlgebra::Mask(1) << t)) vals[m] += choices[t][pick[t]];
      MeasureTable cand(alg, std::move(vals), MeasureKind::premeasure);
      if (a.leq(cand) && b.leq(cand)) CHECK(j.leq(cand));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
}

TEST_CASE("mixed algebras are rejected") {
  std::mt19937_64 rng(2);
  auto a1 = gen::random_algebra(rng, 2);
  auto a2 = std::make_shared<SetAlgebra>(generate_algebra(5, {{0}, {1}, {2}}));
  CHECK_THROWS_AS(
      join_premeasures({gen::random_premeasure(rng, a1), gen::random_premeasure(rng, a2)}),
      std::invalid_argument);
}

TEST_CASE("greatest outer below a monotone table (two-point example)") {
  auto alg = std::make_shared<SetAlgebra>(generate_algebra(2, {{0}, {1}}));
  std::vector<ExtValue> vals{q(1), q(2), q(2), q(5)};  // {}, {0}, {1}, {0,1}
  MeasureTable sigma(alg, std::move(vals), MeasureKind::general);
  MeasureTable rl = greatest_outer_below(sigma);
  CHECK(rl.value(0) == q(0));
  CHECK(rl.value(1) == q(2));
  CHECK(rl.value(2) == q(2));
  CHECK(rl.value(3) == q(4));
  CHECK(validate_measure_kind(rl).outer);
  // cover-enumeration oracle, with the empty-set value pinned to 0
  for (SetAlgebra::Mask b = 1; b < 4; ++b) CHECK(rl.value(b) == brute_inf_covering(sigma, b));
}

TEST_CASE("greatest outer below: fixed points and zero") {
  std::mt19937_64 rng(23);
  auto alg = gen::random_algebra(rng, 3);
  MeasureTable out = gen::random_outer(rng, alg);
  CHECK(greatest_outer_below(out.with_kind(MeasureKind::general)) == out);
  MeasureTable zero(alg, std::vector<ExtValue>(alg->element_count()), MeasureKind::general);
  CHECK(greatest_outer_below(zero) == zero);
}

TEST_CASE("closure and kernel operators on random tables") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    auto alg = gen::random_algebra(rng, 3);
    MeasureTable m = gen::random_outer(rng, alg);
    MeasureTable up = least_premeasure_above(m);
    CHECK(m.leq(up));
    CHECK(least_premeasure_above(up.with_kind(MeasureKind::outer)) == up);  // idempotent
    // Galois: a premeasure dominates m iff it dominates the closure
    MeasureTable p = gen::random_premeasure(rng, alg);
    CHECK(m.leq(p) == up.leq(p));

    MeasureTable inner = gen::random_inner(rng, alg);
    MeasureTable down = greatest_premeasure_below(inner);
    CHECK(down.leq(inner));
    CHECK(greatest_premeasure_below(down.with_kind(MeasureKind::inner)) == down);

    MeasureTable mono = gen::random_monotone_table(rng, alg);
    MeasureTable rl = greatest_outer_below(mono);
    CHECK(rl.leq(mono));
    CHECK(validate_measure_kind(rl).outer);
    // greatest among outer tables below: any outer below mono is below rl
    MeasureTable other = gen::random_outer(rng, alg);
    if (other.leq(mono)) CHECK(other.leq(rl));
  }
}
