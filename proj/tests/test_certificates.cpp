#include <random>

#include "curvex/certificates.hpp"
#include "curvex/errors.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace curvex;

namespace {

bool same(const Rational& r, const oracle::Frac& f) { return r.num() == f.num() && r.den() == f.den(); }

oracle::Frac frac(const Rational& r) { return oracle::Frac(r.num(), r.den()); }

}  // namespace

TEST_SUITE_BEGIN("certificates");

TEST_CASE("test class value") {
  CHECK(test_class_value(6, Rational(2), Rational(2), 0) == Rational(-4));
  // twisted cubic on the quartic, M = 2A - E; frozen from the oracle expansion
  CHECK(same(Rational(-3), oracle::test_class(2, oracle::Frac(4), oracle::Frac(3), 0)));
  CHECK(test_class_value(2, Rational(4), Rational(3), 0) == Rational(-3));
  CHECK(test_class_value(6, Rational(2), Rational(2), 1) == Rational(-2));
}

TEST_CASE("closed form agrees with the expansion") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> bs(1, 12), ns(1, 400), ds(1, 400), gs(0, 5);
  for (int i = 0; i < 1000; ++i) {
    std::int64_t b = bs(rng), p_a = gs(rng);
    Rational a_cube(ns(rng), ds(rng));
    Rational deg(ns(rng), ds(rng));
    Rational closed = test_class_value(b, a_cube, deg, p_a);
    CHECK(closed == test_class_value_expanded(b, a_cube, deg, p_a));
    // full expansion with A^2E = 0 written out
    Rational by_hand = Rational(b) * a_cube - Rational(2 * b + 1) * Rational(0) +
                       Rational(b + 2) * (-deg) - (-deg + Rational(2) - Rational(2 * p_a));
    CHECK(closed == by_hand);
    CHECK(same(closed, oracle::test_class(b, frac(a_cube), frac(deg), p_a)));
  }
}

TEST_CASE("blowup intersections: (6A - E)(A - E)^2 coefficients") {
  // 6A^3 - 13A^2E + 8AE^2 - E^3, read off by feeding unit intersection numbers
  BlowupClass m{Rational(6), Rational(-1)};
  BlowupClass b{Rational(1), Rational(-1)};
  auto unit = [](int k) {
    BlowupIntersections f{Rational(0), Rational(0), Rational(0), Rational(0)};
    (k == 0 ? f.aaa : k == 1 ? f.aae : k == 2 ? f.aee : f.eee) = Rational(1);
    return f;
  };
  CHECK(unit(0).triple(m, b, b) == Rational(6));
  CHECK(unit(1).triple(m, b, b) == Rational(-13));
  CHECK(unit(2).triple(m, b, b) == Rational(8));
  CHECK(unit(3).triple(m, b, b) == Rational(-1));
}

TEST_CASE("test-class list") {
  auto certs = certify_test_class_list(shipped_db());
  REQUIRE(certs.size() == 6);
  const std::vector<std::pair<int, Rational>> expected = {
      {1, Rational(-3)},  // 2*4 - 3*3 - 2
      {2, Rational(-3)},  // 2*5/2 - 3*2 - 2
      {3, Rational(-4)},
      {4, Rational(-2)},  // 2*3/2 - 3*1 - 2
      {5, Rational(-2)},
      {6, Rational(-3)},
  };
  for (std::size_t i = 0; i < certs.size(); ++i) {
    CHECK(certs[i].family == expected[i].first);
    CHECK(certs[i].value == expected[i].second);
    CHECK(certs[i].validity() == Validity::Valid);
    CHECK(certs[i].p_a == 0);
    CHECK(same(certs[i].value,
               oracle::test_class(certs[i].b, frac(certs[i].a_cube), frac(certs[i].deg_c), 0)));
  }
  CHECK_THROWS_AS(make_test_class_certificate(1, "c", 0, Rational(1), Rational(1), 0),
                  PreconditionError);
}

TEST_CASE("validity is strict") {
  CHECK(sign_validity(Rational(-1, 100)) == Validity::Valid);
  CHECK(sign_validity(Rational(0)) == Validity::Boundary);
  CHECK(sign_validity(Rational(1, 100)) == Validity::Invalid);
}

TEST_CASE("different total") {
  std::vector<std::int64_t> five = {5};
  CHECK(different_total(five) == Rational(4, 5));
  CHECK(different_total({}) == Rational(0));
  std::vector<std::int64_t> two_three = {2, 3};
  CHECK(different_total(two_three) == Rational(7, 6));
  std::vector<std::int64_t> bad = {1};
  CHECK_THROWS_AS(different_total(bad), PreconditionError);
}

TEST_CASE("different total is additive and bounded by the list length") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::int64_t> idx(2, 40);
  std::uniform_int_distribution<int> len(0, 6);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(len(rng))), b(static_cast<std::size_t>(len(rng)));
    for (auto& x : a) x = idx(rng);
    for (auto& x : b) x = idx(rng);
    std::vector<std::int64_t> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(different_total(ab) == different_total(a) + different_total(b));
    CHECK(different_total(ab) < Rational(static_cast<std::int64_t>(ab.size())) + Rational(ab.empty() ? 1 : 0));
    CHECK(same(different_total(ab), oracle::different(ab)));
  }
}

TEST_CASE("curve self-intersection on T") {
  CHECK(curve_self_intersection(4, Rational(1, 5), Rational(4, 5)) == Rational(-9, 5));
  CHECK(curve_self_intersection(2, Rational(1, 5), Rational(4, 5)) == Rational(-7, 5));
  for (std::int64_t q = 1; q < 10; ++q) {
    CHECK(curve_self_intersection(1, Rational(1, q), Rational(0)) == Rational(-2));
  }
  CHECK_THROWS_AS(curve_self_intersection(0, Rational(1), Rational(0)), PreconditionError);
}

TEST_CASE("surface exclusion value") {
  CHECK(surface_exclusion_value(4, Rational(13, 60), Rational(1, 5), Rational(-9, 5)) ==
        Rational(-4, 3));

  // family 7, C = {x0 = y1 = y2 = 0}: surviving weights (1, 3), |2A - C|
  auto steps = oracle::surface(1, 3, 2, oracle::Frac(2, 3));
  CHECK(same(Rational(1, 3), steps.deg));
  CHECK(same(Rational(2, 3), steps.diff));
  CHECK(same(Rational(-5, 3), steps.c2t));
  CHECK(same(Rational(-1), steps.value));
  CHECK(surface_exclusion_value(2, Rational(2, 3), Rational(1, 3), Rational(-5, 3)) == Rational(-1));

  // boundary: c = 2q - m a^3
  Rational q(1, 7), a(3, 11);
  Rational c = Rational(2) * q - Rational(5) * a;
  CHECK(surface_exclusion_value(5, a, q, c) == Rational(0));
  CHECK(sign_validity(surface_exclusion_value(5, a, q, c)) == Validity::Boundary);
}

TEST_CASE("surface exclusion value is monotone") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::int64_t> ns(1, 300), ds(1, 300), ms(1, 9);
  for (int i = 0; i < 500; ++i) {
    std::int64_t m = ms(rng);
    Rational a(ns(rng), ds(rng)), q(ns(rng), ds(rng)), c(-ns(rng), ds(rng));
    Rational bump(ns(rng), ds(rng));
    Rational base = surface_exclusion_value(m, a, q, c);
    // larger m A^3 (via larger A^3) raises the value
    CHECK(surface_exclusion_value(m, a + bump, q, c) > base);
    CHECK(surface_exclusion_value(m + 1, a, q, c) > base);
    // larger deg C lowers it
    CHECK(surface_exclusion_value(m, a, q + bump, c) < base);
  }
}

TEST_CASE("two-curve certificate") {
  auto f29 = two_curve_certificate(Rational(1, 5), Rational(1, 5), Rational(1, 5), Rational(-7, 5));
  CHECK(f29.forces_alpha_one);
  CHECK(f29.degree_contradiction);
  CHECK(f29.valid());

  auto weak = two_curve_certificate(Rational(1), Rational(1, 4), Rational(1, 4), Rational(-1));
  CHECK(weak.forces_alpha_one);
  CHECK_FALSE(weak.degree_contradiction);
  CHECK_FALSE(weak.valid());

  CHECK_FALSE(two_curve_certificate(Rational(1), Rational(1), Rational(1), Rational(0)).forces_alpha_one);
  CHECK_THROWS_AS(two_curve_certificate(Rational(1), Rational(0), Rational(1), Rational(-1)),
                  PreconditionError);
}

TEST_SUITE_END();
