#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvex/certificates.hpp"
#include "curvex/extension.hpp"
#include "curvex/family_db.hpp"
#include "curvex/lemmas.hpp"
#include "curvex/surface_table.hpp"

namespace curvex {

// ---------------------------------------------------------------------------
// Family lists re-derived from the weights, next to the expected values.
// ---------------------------------------------------------------------------

struct DerivedList {
  std::string name;
  std::string description;
  std::vector<int> derived;
  std::vector<int> expected;

  bool matches() const { return derived == expected; }
  std::vector<int> missing() const;  // expected but not derived
  std::vector<int> extra() const;    // derived but not expected
};

// Six lists, in a fixed order: proj1_fails, proj1_weak, proj1_strong,
// proj2_exceptions, contracted_unsafe, gcd_gt_one. Both sides sorted.
std::vector<DerivedList> derive_lists(const FamilyDb& db);

// ---------------------------------------------------------------------------
// Coverage audit.
// ---------------------------------------------------------------------------

enum class CurveClass { Residual, Contracted };
enum class AnnotationKind { GeometricContainment, GeneralityAssumption, SurfaceGeometry };
enum class CoverageStatus { Covered, Gap };

std::string to_string(CurveClass c);
std::string to_string(AnnotationKind k);
std::string to_string(CoverageStatus s);

// A step the engine relies on but cannot check numerically.
struct Annotation {
  AnnotationKind kind;
  std::string text;
};

struct Route {
  CurveClass curve_class;
  std::string operation;
  std::string verdict;
  bool closes;  // false for supporting evidence or a failed check
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<Annotation> annotations;
};

struct FamilyCoverage {
  int family;
  CaseTag tag;
  Rational degree_bound;
  std::vector<Route> routes;
  std::vector<std::string> gaps;  // curve classes without a closing route

  CoverageStatus status() const { return gaps.empty() ? CoverageStatus::Covered : CoverageStatus::Gap; }
  bool has_annotation(AnnotationKind kind) const;
};

struct AuditInputs {
  const FamilyDb& db;
  const std::vector<TestClassCertificate>& test_class;
  const std::vector<SurfaceRow>& rows;
  const std::vector<SurfaceCertificate>& surface;  // parallel to rows
};

FamilyCoverage audit_family(const FamilyRecord& f, const AuditInputs& in);
std::vector<FamilyCoverage> audit(const AuditInputs& in);

// Everything `audit full` computes, in one place.
struct FullReport {
  std::vector<DerivedList> lists;
  std::vector<TestClassCertificate> test_class;
  std::vector<SurfaceRow> rows;
  std::vector<SurfaceCertificate> surface;
  std::vector<DivisibilityCertificate> divisibility;
  std::vector<ExtensionReport> extension;
  std::vector<FamilyCoverage> coverage;

  bool lists_match() const;
  bool certificates_valid() const;
  int covered() const;
  int gaps() const;
};

FullReport build_full_report(const FamilyDb& db, std::vector<SurfaceRow> rows);

// Divisibility certificates for every family whose contracted curves are not
// handled by the degree argument, one per tangent index.
std::vector<DivisibilityCertificate> divisibility_certificates(const FamilyDb& db);

}  // namespace curvex
