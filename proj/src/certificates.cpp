#include "curvex/certificates.hpp"

#include <array>

#include "curvex/errors.hpp"

namespace curvex {

std::string to_string(Validity v) {
  switch (v) {
    case Validity::Valid: return "VALID";
    case Validity::Boundary: return "INVALID (boundary)";
    case Validity::Invalid: return "INVALID";
  }
  return "?";
}

Validity sign_validity(const Rational& value) {
  if (value.sign() < 0) return Validity::Valid;
  if (value.is_zero()) return Validity::Boundary;
  return Validity::Invalid;
}

BlowupIntersections BlowupIntersections::of_curve(const Rational& a_cube,
                                                  const Rational& deg_c, std::int64_t p_a) {
  return BlowupIntersections{
      a_cube,
      Rational(0),
      -deg_c,
      -deg_c + Rational(2) - Rational(checked_mul(2, p_a)),
  };
}

Rational BlowupIntersections::triple(const BlowupClass& x, const BlowupClass& y,
                                     const BlowupClass& z) const {
  // index by the number of E factors
  const std::array<Rational, 4> by_e_count = {aaa, aae, aee, eee};
  const std::array<const BlowupClass*, 3> factors = {&x, &y, &z};
  Rational total;
  for (int mask = 0; mask < 8; ++mask) {
    Rational term(1);
    int e_count = 0;
    for (int k = 0; k < 3; ++k) {
      bool take_e = (mask >> k) & 1;
      term *= take_e ? factors[k]->e : factors[k]->a;
      e_count += take_e;
    }
    total += term * by_e_count[static_cast<std::size_t>(e_count)];
  }
  return total;
}

Rational test_class_value(std::int64_t b, const Rational& a_cube, const Rational& deg_c,
                          std::int64_t p_a) {
  return Rational(b) * a_cube - Rational(checked_add(b, 1)) * deg_c - Rational(2) +
         Rational(checked_mul(2, p_a));
}

Rational test_class_value_expanded(std::int64_t b, const Rational& a_cube,
                                   const Rational& deg_c, std::int64_t p_a) {
  auto form = BlowupIntersections::of_curve(a_cube, deg_c, p_a);
  BlowupClass m{Rational(b), Rational(-1)};
  BlowupClass anti{Rational(1), Rational(-1)};
  return form.triple(m, anti, anti);
}

TestClassCertificate make_test_class_certificate(int family, std::string curve, std::int64_t b,
                                                 const Rational& a_cube, const Rational& deg_c,
                                                 std::int64_t p_a) {
  if (b < 1 || deg_c.sign() <= 0 || p_a < 0) {
    throw PreconditionError("test class needs b >= 1, deg C > 0, p_a >= 0");
  }
  Rational closed = test_class_value(b, a_cube, deg_c, p_a);
  Rational expanded = test_class_value_expanded(b, a_cube, deg_c, p_a);
  if (closed != expanded) {
    throw TheoremViolation("family " + std::to_string(family) + ": test class closed form " +
                           closed.str() + " != expansion " + expanded.str());
  }
  return TestClassCertificate{family, std::move(curve), b, a_cube, deg_c, p_a, closed};
}

std::vector<TestClassCertificate> certify_test_class_list(const FamilyDb& db) {
  struct Entry {
    int family;
    const char* curve;
    std::int64_t b;
    std::int64_t deg_c;
  };
  static constexpr std::array<Entry, 6> kList = {{
      {1, "twisted cubic in a linear P^3", 2, 3},
      {2, "{y = x3 = x0x1 + x2^2 = 0}", 2, 2},
      {3, "{y = x3 = x0x1 + x2^2 = 0}", 6, 2},
      {4, "{y2 = y1 = x0 = 0}", 2, 1},
      {5, "{z = y = x0 = 0}", 6, 1},
      {6, "{z = y = x0 = 0}", 4, 1},
  }};
  std::vector<TestClassCertificate> out;
  out.reserve(kList.size());
  for (const auto& e : kList) {
    const auto& f = db.get(e.family);
    out.push_back(make_test_class_certificate(e.family, e.curve, e.b, f.a_cube,
                                              Rational(e.deg_c), 0));
  }
  return out;
}

Rational different_total(std::span<const std::int64_t> indices) {
  Rational total;
  for (auto m : indices) {
    if (m < 2) throw PreconditionError("different index must be >= 2, got " + std::to_string(m));
    total += Rational(m - 1, m);
  }
  return total;
}

Rational curve_self_intersection(std::int64_t m, const Rational& deg_c,
                                 const Rational& diff_total) {
  if (m < 1) throw PreconditionError("surface multiple m must be >= 1");
  return Rational(-2) + diff_total - Rational(m - 1) * deg_c;
}

Rational surface_exclusion_value(std::int64_t m, const Rational& a_cube, const Rational& deg_c,
                                 const Rational& c2t) {
  if (m < 1) throw PreconditionError("surface multiple m must be >= 1");
  return Rational(m) * a_cube - Rational(2) * deg_c + c2t;
}

TwoCurveResult two_curve_certificate(const Rational& a_cube, const Rational& deg_c,
                                     const Rational& deg_c_prime, const Rational& c_prime_sq) {
  if (deg_c.sign() <= 0 || deg_c_prime.sign() <= 0) {
    throw PreconditionError("two-curve certificate needs positive degrees");
  }
  return TwoCurveResult{c_prime_sq.sign() < 0, deg_c + deg_c_prime > a_cube};
}

}  // namespace curvex
