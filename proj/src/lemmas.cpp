#include "curvex/lemmas.hpp"

#include "curvex/errors.hpp"

namespace curvex {

namespace {

void require_case(const FamilyRecord& f, CaseTag want, const char* op) {
  CaseTag got = classify_case(f);
  if (got != want) {
    throw PreconditionError(std::string(op) + ": family " + std::to_string(f.number) +
                            " is " + to_string(got) + ", expected " + to_string(want));
  }
}

PointCheck compare(std::string label, Rational degree, const Rational& a_cube) {
  bool contradiction = degree > a_cube;
  return PointCheck{std::move(label), degree, a_cube, contradiction};
}

}  // namespace

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2: return "Case2";
    case CaseTag::Case3: return "Case3";
  }
  return "?";
}

std::string to_string(ProjectionStatus s) {
  switch (s) {
    case ProjectionStatus::Strong: return "Strong";
    case ProjectionStatus::Weak: return "Weak";
    case ProjectionStatus::Fails: return "Fails";
  }
  return "?";
}

std::string to_string(ContractedReason r) {
  switch (r) {
    case ContractedReason::NoContractedCurves: return "NoContractedCurves";
    case ContractedReason::DegreeBound: return "DegreeBound";
  }
  return "?";
}

CaseTag classify_case(const FamilyRecord& f) {
  const auto& w = f.weights;
  if (w[1] > 1) return CaseTag::Case1;
  if (w[2] > 1) return CaseTag::Case2;
  return CaseTag::Case3;
}

Rational degree_bound(const FamilyRecord& f) { return f.a_cube; }

Case1PointChecks case1_point_checks(const FamilyRecord& f) {
  require_case(f, CaseTag::Case1, "case1_point_checks");
  const auto& w = f.weights;
  const Rational& a3 = f.a_cube;
  return {
      compare("y=z=0", Rational(1, w[3]), a3),
      compare("y^a2+z^a1=x=0", Rational(1, w[3]), a3),
      compare("x=z=0", Rational(1, checked_mul(w[1], w[3])), a3),
      compare("x=y=0 strong", Rational(1, checked_mul(w[2], w[3])), a3),
      compare("x=y=0 weak", Rational(w[1]) * a3, a3),
  };
}

Case1Verdict case1_projection_verdict(const FamilyRecord& f) {
  require_case(f, CaseTag::Case1, "case1_projection_verdict");
  const auto& w = f.weights;
  std::int64_t a1a4 = checked_mul(w[1], w[4]);
  std::int64_t a2a4 = checked_mul(w[2], w[4]);
  ProjectionStatus status = ProjectionStatus::Fails;
  if (f.d < a1a4) {
    status = ProjectionStatus::Strong;
  } else if (f.d < a2a4) {
    status = ProjectionStatus::Weak;
  }
  return Case1Verdict{status, f.d, a1a4, a2a4, case1_point_checks(f)};
}

bool has_common_low_weights(const FamilyRecord& f) {
  return gcd(f.weights[1], f.weights[2]) > 1;
}

GcdCheck case1_gcd_check(const FamilyRecord& f) {
  std::int64_t g = gcd(f.weights[1], f.weights[2]);
  if (g <= 1) {
    throw PreconditionError("case1_gcd_check: family " + std::to_string(f.number) +
                            " has gcd(a1,a2) = 1");
  }
  Rational value(1, checked_mul(f.weights[3], g));
  return GcdCheck{g, value, f.a_cube, value > f.a_cube, value == f.a_cube};
}

bool case2_projection_verdict(const FamilyRecord& f) {
  require_case(f, CaseTag::Case2, "case2_projection_verdict");
  return f.d < checked_mul(f.weights[2], f.weights[4]);
}

ContractedVerdict contracted_curve_verdict(const FamilyRecord& f) {
  const auto& w = f.weights;
  std::int64_t a1a2a3 = checked_mul(checked_mul(w[1], w[2]), w[3]);
  bool on_x = coordinate_point_on_x(f.d, w, 4);
  if (!on_x) return {true, ContractedReason::NoContractedCurves, on_x, a1a2a3};
  if (f.d < a1a2a3) return {true, ContractedReason::DegreeBound, on_x, a1a2a3};
  return {false, std::nullopt, on_x, a1a2a3};
}

std::vector<int> tangent_indices(const FamilyRecord& f) {
  std::vector<int> out;
  for (int i = 1; i <= 3; ++i) {
    if (checked_add(f.weights[i], checked_mul(2, f.weights[4])) == f.d) out.push_back(i);
  }
  return out;
}

DivisibilityCertificate contracted_divisibility_certificate(const FamilyRecord& f, int j) {
  const auto& w = f.weights;
  if (j < 0 || j > 3 || checked_add(w[j], checked_mul(2, w[4])) != f.d) {
    throw PreconditionError("contracted_divisibility_certificate: family " +
                            std::to_string(f.number) + ", j = " + std::to_string(j) +
                            " does not satisfy a_j + 2 a4 = d");
  }
  DivisibilityCertificate cert{f.number, j, f.d, w[4], {}};
  std::int64_t residual = f.d - w[4];
  for (int i = 0; i < 4; ++i) {
    if (i == j || w[i] <= 1) continue;
    DivisibilityEntry e{i, w[i], residual % w[i] == 0, f.d % w[i] == 0};
    if (!e.divides_d_minus_a4 && !e.divides_d) {
      throw TheoremViolation("family " + std::to_string(f.number) + ": reduced weight " +
                             std::to_string(w[i]) + " divides neither d - a4 = " +
                             std::to_string(residual) + " nor d = " + std::to_string(f.d));
    }
    cert.entries.push_back(e);
  }
  return cert;
}

bool case3_integer_degree_filter(const FamilyRecord& f) {
  require_case(f, CaseTag::Case3, "case3_integer_degree_filter");
  return f.a_cube < Rational(1);
}

}  // namespace curvex
