#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "curvex/family_db.hpp"

// Per-family classification of the low-degree curve lemmas: which families the
// projection arguments handle, and the numeric comparisons behind them.
namespace curvex {

// Case1: a1 > 1.  Case2: a1 = 1 < a2.  Case3: a0 = a1 = a2 = 1.
enum class CaseTag { Case1, Case2, Case3 };

std::string to_string(CaseTag tag);

CaseTag classify_case(const FamilyRecord& f);

// Any curve of degree above this is excluded outright.
Rational degree_bound(const FamilyRecord& f);

// --- families with a1 > 1: projection to P(1,a1,a2,a3) ---------------------

// Strong: d < a1 a4.  Weak: a1 a4 <= d < a2 a4.  Fails: d >= a2 a4.
enum class ProjectionStatus { Strong, Weak, Fails };

std::string to_string(ProjectionStatus s);

// One degree comparison in the image-point analysis. The curve (or curve
// image) of degree `curve_degree` yields a contradiction iff it exceeds A^3.
struct PointCheck {
  std::string label;
  Rational curve_degree;
  Rational a_cube;
  bool contradiction;
};

// The image point in P(1,a1,a2) is one of four kinds. The last kind splits
// into the strong-hypothesis comparison and the weak-hypothesis one, so five
// checks are returned, in order:
//   y=z=0             1/a3        vs A^3
//   y^a2+z^a1=x=0     1/a3        vs A^3
//   x=z=0             1/(a1 a3)   vs A^3   (same as a2 a4 > d)
//   x=y=0 strong      1/(a2 a3)   vs A^3   (same as a1 a4 > d)
//   x=y=0 weak        a1 A^3      vs A^3   (same as a1 > 1)
using Case1PointChecks = std::array<PointCheck, 5>;

struct Case1Verdict {
  ProjectionStatus status;
  std::int64_t d;
  std::int64_t a1a4;
  std::int64_t a2a4;
  Case1PointChecks points;
};

Case1PointChecks case1_point_checks(const FamilyRecord& f);
Case1Verdict case1_projection_verdict(const FamilyRecord& f);

// When gcd(a1,a2) > 1 the mixed image point gives a curve of degree
// 1/(a3 gcd(a1,a2)); the argument goes through iff that exceeds A^3.
struct GcdCheck {
  std::int64_t gcd;
  Rational value;
  Rational a_cube;
  bool applies;
  bool equality;
};

bool has_common_low_weights(const FamilyRecord& f);  // gcd(a1,a2) > 1
GcdCheck case1_gcd_check(const FamilyRecord& f);

// --- families with a1 = 1 < a2 ----------------------------------------------

// True iff d < a2 a4.
bool case2_projection_verdict(const FamilyRecord& f);

// --- curves contracted by the projection from P4 ----------------------------

enum class ContractedReason { NoContractedCurves, DegreeBound };

std::string to_string(ContractedReason r);

struct ContractedVerdict {
  bool safe;
  std::optional<ContractedReason> reason;  // empty when unsafe
  bool p4_on_x;
  std::int64_t a1a2a3;
};

// safe iff P4 is not on X, or d < a1 a2 a3.
ContractedVerdict contracted_curve_verdict(const FamilyRecord& f);

// Indices j in {1,2,3} with a_j + 2 a4 = d, i.e. x_j x4^2 can be the tangent
// monomial at P4.
std::vector<int> tangent_indices(const FamilyRecord& f);

struct DivisibilityEntry {
  int index;
  std::int64_t weight;
  bool divides_d_minus_a4;
  bool divides_d;
};

struct DivisibilityCertificate {
  int family;
  int j;
  std::int64_t d;
  std::int64_t a4;
  std::vector<DivisibilityEntry> entries;  // reduced weights > 1 only
};

// For each reduced weight a > 1 (indices other than j and 4), records whether
// a | (d - a4) or a | d. Throws PreconditionError unless a_j + 2 a4 = d and
// TheoremViolation if some weight divides neither.
DivisibilityCertificate contracted_divisibility_certificate(const FamilyRecord& f, int j);

// --- families with a2 = 1 ---------------------------------------------------

// Non-stratum curves have integral degree here, so A^3 < 1 rules them all out.
bool case3_integer_degree_filter(const FamilyRecord& f);

}  // namespace curvex
