#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kanmeasure/generate.hpp"

using namespace kanmeasure;

namespace {
ExtValue q(long n, long d = 1) { return ExtValue(Rational(n, d)); }

// Independent oracle: sum the weights of the set's members below a depth.
Rational partial_sum(const GeomWeightPremeasure& rho, const EventuallyPeriodicSet& a,
                     std::uint64_t depth) {
  Rational s = 0;
  for (std::uint64_t n = 0; n < depth; ++n)
    if (a.contains(n)) s += rho.weight(n);
  return s;
}
}  // namespace

TEST_CASE("half-weight premeasure on algebra elements") {
  GeomWeightPremeasure rho = GeomWeightPremeasure::half_weights();  // w_n = (1/2)^(n+1)
  CHECK(rho.total_mass() == q(1));
  CHECK(premeasure_eval(rho, CofinSet::finite({0})) == q(1, 2));
  CHECK(premeasure_eval(rho, CofinSet::cofinite({0})) == q(1, 2));
  CHECK(premeasure_eval(rho, CofinSet()) == q(0));
}

TEST_CASE("finite additivity of the premeasure on sampled disjoint unions") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> len(0, 5), val(0, 10);
  for (int trial = 0; trial < 100; ++trial) {
    GeomWeightPremeasure rho = gen::random_weight_premeasure(rng);
    std::vector<std::uint64_t> s1(len(rng)), s2(len(rng));
    for (auto& x : s1) x = std::uint64_t(val(rng));
    for (auto& x : s2) x = std::uint64_t(val(rng));
    CofinSet a = CofinSet::finite(s1);
    CofinSet b = set_difference(trial % 3 ? CofinSet::finite(s2) : CofinSet::cofinite(s2), a);
    CHECK(premeasure_eval(rho, set_union(a, b)) == premeasure_eval(rho, a) + premeasure_eval(rho, b));
  }
}

TEST_CASE("extension of the even numbers, pinned by monotone partial sums") {
  GeomWeightPremeasure rho = GeomWeightPremeasure::half_weights();
  EventuallyPeriodicSet evens = EventuallyPeriodicSet::residue_class(0, 2);
  ExtValue v = right_extend(rho, evens);

  Rational prev = -1;
  for (std::uint64_t depth = 1; depth <= 41; ++depth) {
    Rational p = partial_sum(rho, evens, depth);
    REQUIRE(p >= prev);
    REQUIRE(ExtValue(p) <= v);
    prev = p;
  }
  REQUIRE(v.rational() - prev < rational_pow(Rational(1, 2), 39));
  CHECK(v == q(2, 3));  // value pinned by the bracket above
}

TEST_CASE("properness: the extension restricted to the algebra is the premeasure") {
  GeomWeightPremeasure rho = GeomWeightPremeasure::half_weights();
  CofinSet e = CofinSet::cofinite({0});
  CHECK(right_extend(rho, EventuallyPeriodicSet::from_cofin(e)) == premeasure_eval(rho, e));
  CHECK(right_extend(rho, EventuallyPeriodicSet::empty()) == q(0));

  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> len(0, 5), val(0, 9), coin(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    GeomWeightPremeasure r2 = gen::random_weight_premeasure(rng);
    std::vector<std::uint64_t> s(len(rng));
    for (auto& x : s) x = std::uint64_t(val(rng));
    CofinSet c = coin(rng) ? CofinSet::cofinite(s) : CofinSet::finite(s);
    CHECK(right_extend(r2, EventuallyPeriodicSet::from_cofin(c)) == premeasure_eval(r2, c));
  }
}

TEST_CASE("additivity of the extension on disjoint representable sets") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    GeomWeightPremeasure rho = gen::random_weight_premeasure(rng);
    EventuallyPeriodicSet a = gen::random_eps(rng);
    EventuallyPeriodicSet b = set_difference(gen::random_eps(rng), a);
    CHECK(right_extend(rho, set_union(a, b)) == right_extend(rho, a) + right_extend(rho, b));
    if (a.subset_of(b)) CHECK(right_extend(rho, a) <= right_extend(rho, b));
  }
}

TEST_CASE("cover bounds bracket the extension") {
  GeomWeightPremeasure rho = GeomWeightPremeasure::half_weights();
  EventuallyPeriodicSet evens = EventuallyPeriodicSet::residue_class(0, 2);
  auto [lo4, hi4] = cover_bound_oracle(rho, evens, 4);
  CHECK(lo4 == q(5, 8));
  CHECK(hi4 == q(11, 16));
  auto [lo1, hi1] = cover_bound_oracle(rho, evens, 1);
  CHECK(lo1 == q(1, 2));
  CHECK(hi1 == q(1));
  auto [loe, hie] = cover_bound_oracle(rho, EventuallyPeriodicSet::empty(), 3);
  CHECK(loe == q(0));
  CHECK(hie == rho.tail_mass(3));

  ExtValue v = right_extend(rho, evens);
  for (std::uint64_t depth = 1; depth <= 64; ++depth) {
    auto [lo, hi] = cover_bound_oracle(rho, evens, depth);
    CHECK(lo <= v);
    CHECK(v <= hi);
    CHECK(hi == lo + rho.tail_mass(depth));  // bracket width is the tail mass
  }
}

TEST_CASE("inner and right extensions agree for finite mass") {
  GeomWeightPremeasure rho = GeomWeightPremeasure::half_weights();
  EventuallyPeriodicSet evens = EventuallyPeriodicSet::residue_class(0, 2);
  CHECK(inner_extend(rho, evens) == q(2, 3));
  CHECK(inner_extend(rho, EventuallyPeriodicSet::empty()) == q(0));
  // an algebra element is attained by the one-member family
  CofinSet e = CofinSet::finite({2, 4});
  CHECK(inner_extend(rho, EventuallyPeriodicSet::from_cofin(e)) == premeasure_eval(rho, e));

  std::mt19937_64 rng(77);
  std::vector<EventuallyPeriodicSet> samples;
  for (int i = 0; i < 50; ++i) samples.push_back(gen::random_eps(rng));
  CHECK(uniqueness_check(rho, samples));
  CHECK(uniqueness_check(GeomWeightPremeasure::with_zero_tail({}), samples));
  CHECK_THROWS_AS(uniqueness_check(GeomWeightPremeasure::all_infinite(), samples),
                  std::domain_error);
}

TEST_CASE("inner extension never exceeds the right extension") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 80; ++trial) {
    GeomWeightPremeasure rho = gen::random_weight_premeasure(rng);
    EventuallyPeriodicSet a = gen::random_eps(rng);
    CHECK(inner_extend(rho, a) <= right_extend(rho, a));
  }
}

TEST_CASE("algebra approximation meets its bound") {
  GeomWeightPremeasure rho = GeomWeightPremeasure::half_weights();
  EventuallyPeriodicSet evens = EventuallyPeriodicSet::residue_class(0, 2);
  SECTION("the even numbers at epsilon 1/8") {
    CofinSet b = approximate_by_algebra(rho, evens, Rational(1, 8));
    CHECK(b == CofinSet::finite({0, 2}));
    ExtValue err = right_extend(rho, symmetric_difference(evens, EventuallyPeriodicSet::from_cofin(b)));
    CHECK(err == q(1, 24));
  }
  SECTION("sets already in the algebra return themselves") {
    CofinSet c = CofinSet::cofinite({1, 5});
    CHECK(approximate_by_algebra(rho, EventuallyPeriodicSet::from_cofin(c), Rational(1, 100)) == c);
  }
  SECTION("epsilon above the total mass admits the empty set") {
    CofinSet b = approximate_by_algebra(rho, evens, Rational(2));
    ExtValue err = right_extend(rho, symmetric_difference(evens, EventuallyPeriodicSet::from_cofin(b)));
    CHECK(err < ExtValue(Rational(2)));
  }
  SECTION("co-small sets are completed cofinitely") {
    EventuallyPeriodicSet co_evens = evens.complement();
    EventuallyPeriodicSet dense = set_union(co_evens, EventuallyPeriodicSet::residue_class(0, 4));
    CofinSet b = approximate_by_algebra(rho, dense, Rational(1, 16));
    CHECK(b.is_cofinite());
    ExtValue err = right_extend(rho, symmetric_difference(dense, EventuallyPeriodicSet::from_cofin(b)));
    CHECK(err < ExtValue(Rational(1, 16)));
  }
  SECTION("random instances satisfy the bound exactly") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> en(1, 8), ed(2, 40);
    int done = 0;
    for (int trial = 0; trial < 80 && done < 50; ++trial) {
      GeomWeightPremeasure r2 = gen::random_weight_premeasure(rng);
      EventuallyPeriodicSet a = gen::random_eps(rng);
      Rational eps(en(rng), ed(rng));
      CofinSet b = approximate_by_algebra(r2, a, eps);
      ExtValue err = right_extend(r2, symmetric_difference(a, EventuallyPeriodicSet::from_cofin(b)));
      CHECK(err < ExtValue(eps));
      ++done;
    }
    CHECK(done == 50);
  }
}

TEST_CASE("restriction compatibility along the two routes") {
  GeomWeightPremeasure rho = GeomWeightPremeasure::half_weights();
  CHECK(restriction_compat_check(rho, CofinSet::cofinite({0})));
  CHECK(restriction_compat_check(rho, CofinSet()));
  CHECK(restriction_compat_check(rho, CofinSet::finite({1, 3, 8})));
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> len(0, 6), val(0, 11), coin(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    GeomWeightPremeasure r2 = gen::random_weight_premeasure(rng);
    std::vector<std::uint64_t> s(len(rng));
    for (auto& x : s) x = std::uint64_t(val(rng));
    CofinSet b = coin(rng) ? CofinSet::cofinite(s) : CofinSet::finite(s);
    CHECK(restriction_compat_check(r2, b));
  }
}

TEST_CASE("the all-infinite premeasure") {
  GeomWeightPremeasure inf_rho = GeomWeightPremeasure::all_infinite();
  CHECK(premeasure_eval(inf_rho, CofinSet::finite({3})) == ExtValue::infinity());
  CHECK(premeasure_eval(inf_rho, CofinSet()) == q(0));
  EventuallyPeriodicSet evens = EventuallyPeriodicSet::residue_class(0, 2);
  CHECK(right_extend(inf_rho, evens) == ExtValue::infinity());
  CHECK(inner_extend(inf_rho, evens) == ExtValue::infinity());
  auto [lo, hi] = cover_bound_oracle(inf_rho, evens, 4);
  CHECK(lo == ExtValue::infinity());
  CHECK(hi == ExtValue::infinity());
  CHECK_THROWS_AS(approximate_by_algebra(inf_rho, evens, Rational(1)), std::domain_error);
}
