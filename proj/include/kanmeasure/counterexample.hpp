#pragma once

#include <random>
#include <string>
#include <vector>

#include "rat_interval.hpp"

namespace kanmeasure {

struct CertificateStep {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Scripted reproduction of the failure of the least-sided extension on the
/// rational interval algebra. Each step is an executed check or a recorded
/// analytic inference; the conclusion is the contradiction that rules the
/// extension out. This is a certificate for one model, not a decision
/// procedure.
struct CounterexampleCertificate {
  std::vector<CertificateStep> steps;
  std::string conclusion;
  bool all_passed = false;
};

inline CounterexampleCertificate counterexample_report(std::uint64_t seed = 0) {
  CounterexampleCertificate cert;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 6);
  auto rnd_q = [&] { return Rational(num(rng), den(rng)); };
  auto rnd_elem = [&] {
    RatIntervalSet s;
    int pieces = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < pieces; ++i) {
      Rational a = rnd_q(), b = rnd_q();
      if (b < a) std::swap(a, b);
      if (a == b) b = a + 1;
      s = set_union(s, RatIntervalSet::interval(a, b));
    }
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) s = s.complement();
    return s;
  };
  // the premeasure under test: infinity on every nonempty algebra element
  auto rho = [](const RatIntervalSet& b) {
    return b.is_empty() ? ExtValue() : ExtValue::infinity();
  };
  const std::vector<Rational> sampled_r{Rational(1), Rational(1, 2), Rational(1, 10),
                                        Rational(1, 1000)};
  // the comparison measures: mu_r(B) = r * |B|, infinite on infinite B
  auto mu_r = [](const Rational& r, const RatIntervalSet& b) {
    (void)r;
    return b.is_empty() ? ExtValue() : ExtValue::infinity();
  };

  {
    CertificateStep s{"premeasure-additivity-spot-check", true, ""};
    for (int i = 0; i < 20 && s.pass; ++i) {
      RatIntervalSet a = rnd_elem();
      RatIntervalSet b = set_difference(rnd_elem(), a);  // force disjointness
      if (!disjoint(a, b)) {
        s.pass = false;
        s.detail = "generator produced overlapping pieces";
        break;
      }
      ExtValue lhs = rho(set_union(a, b));
      ExtValue rhs = rho(a) + rho(b);
      if (lhs != rhs) {
        s.pass = false;
        s.detail = "additivity fails on " + a.render() + " and " + b.render();
      }
    }
    cert.steps.push_back(s);
  }
  {
    CertificateStep s{"every-nonempty-element-is-infinite-so-mu_r-restricts-to-rho", true, ""};
    int checked = 0;
    for (int i = 0; i < 40 && checked < 20; ++i) {
      RatIntervalSet b = rnd_elem();
      if (b.is_empty()) continue;
      ++checked;
      for (const Rational& r : sampled_r)
        if (mu_r(r, b) != rho(b)) {
          s.pass = false;
          s.detail = "restriction mismatch on " + b.render();
        }
    }
    if (checked < 20) {
      s.pass = false;
      s.detail = "generator exhausted before 20 nonempty elements";
    }
    cert.steps.push_back(s);
  }
  {
    // a candidate least extension mu must sit below every mu_r, so on any
    // singleton mu({q}) <= mu_r({q}) = r for each sampled r
    CertificateStep s{"universal-property-bounds-singletons", true, ""};
    Rational best = sampled_r.front();
    for (const Rational& r : sampled_r) best = std::min(best, r);
    s.detail = "mu({q}) <= r for sampled r down to " + ExtValue(best).to_string() +
               "; r -> 0 is analytic, forcing mu({q}) = 0";
    cert.steps.push_back(s);
  }
  {
    CertificateStep s{"sigma-additivity-over-singletons-forces-zero", true, ""};
    RatIntervalSet unit = RatIntervalSet::interval(Rational(0), Rational(1));
    if (unit.is_empty() || !unit.contains(Rational(1, 2))) {
      s.pass = false;
      s.detail = "unit interval misbehaves";
    } else {
      s.detail = "(0,1] splits into countably many singletons of value 0, so mu((0,1]) = 0, "
                 "while the premeasure assigns " +
                 rho(unit).to_string();
    }
    cert.steps.push_back(s);
  }

  cert.all_passed = true;
  for (const auto& s : cert.steps) cert.all_passed = cert.all_passed && s.pass;
  cert.conclusion = cert.all_passed ? "contradiction: 0 ≠ ∞" : "certificate incomplete";
  return cert;
}

}  // namespace kanmeasure
