#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "curvex/family_db.hpp"

namespace curvex {

// Exclusion needs a strictly negative number; zero is its own verdict so the
// reports can tell a near miss from a clear failure.
enum class Validity { Valid, Boundary, Invalid };

std::string to_string(Validity v);

Validity sign_validity(const Rational& value);

// ---------------------------------------------------------------------------
// Test classes on the blowup Y -> X of a curve C, exceptional divisor E.
// ---------------------------------------------------------------------------

// A class xA + yE on the blowup.
struct BlowupClass {
  Rational a;
  Rational e;
};

// Triple intersection numbers on span{A, E} for the blowup of a curve of
// degree `deg_c` and arithmetic genus `p_a`:
//   A^3, A^2E = 0, AE^2 = -deg C, E^3 = -deg N = -deg C + 2 - 2 p_a.
struct BlowupIntersections {
  Rational aaa;
  Rational aae;
  Rational aee;
  Rational eee;

  static BlowupIntersections of_curve(const Rational& a_cube, const Rational& deg_c,
                                      std::int64_t p_a);

  // Trilinear product of three classes.
  Rational triple(const BlowupClass& x, const BlowupClass& y, const BlowupClass& z) const;
};

// M B^2 for M = bA - E and B = A - E, closed form
//   b A^3 - (b+1) deg C - 2 + 2 p_a.
Rational test_class_value(std::int64_t b, const Rational& a_cube, const Rational& deg_c,
                          std::int64_t p_a);

// Same number by expanding (bA - E)(A - E)(A - E) term by term.
Rational test_class_value_expanded(std::int64_t b, const Rational& a_cube,
                                   const Rational& deg_c, std::int64_t p_a);

struct TestClassCertificate {
  int family;
  std::string curve;
  std::int64_t b;
  Rational a_cube;
  Rational deg_c;
  std::int64_t p_a;
  Rational value;

  Validity validity() const { return sign_validity(value); }
};

// Computes the value both ways; TheoremViolation if the routes disagree.
TestClassCertificate make_test_class_certificate(int family, std::string curve, std::int64_t b,
                                                 const Rational& a_cube, const Rational& deg_c,
                                                 std::int64_t p_a);

// Certificates for the six curves that survive the coarse arguments in the
// families with a2 = 1 (families 1..6).
std::vector<TestClassCertificate> certify_test_class_list(const FamilyDb& db);

// ---------------------------------------------------------------------------
// Surface methods: a general T in |mA - C| through C.
// ---------------------------------------------------------------------------

// Sum of (m_i - 1)/m_i over the indices of C in T at its singular points.
Rational different_total(std::span<const std::int64_t> indices);

// Adjunction on T: deg(K_C + Diff) = (K_X + T)C + C^2, with K_X + T = (m-1)A:
//   C^2 = -2 + Diff - (m-1) deg C.
Rational curve_self_intersection(std::int64_t m, const Rational& deg_c,
                                 const Rational& diff_total);

// (A|_T - C)^2 = m A^3 - 2 deg C + C^2. Negative means C is excluded.
Rational surface_exclusion_value(std::int64_t m, const Rational& a_cube, const Rational& deg_c,
                                 const Rational& c2t);

// Two-curve variant: A|_T = C + C'. A negative C'^2 forces C' into the
// centre set too, and then deg C + deg C' > A^3 is impossible.
struct TwoCurveResult {
  bool forces_alpha_one;
  bool degree_contradiction;

  bool valid() const { return forces_alpha_one && degree_contradiction; }
};

TwoCurveResult two_curve_certificate(const Rational& a_cube, const Rational& deg_c,
                                     const Rational& deg_c_prime, const Rational& c_prime_sq);

}  // namespace curvex
