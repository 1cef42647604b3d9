#include "curvex/audit.hpp"

#include <algorithm>
#include <iterator>

#include "curvex/errors.hpp"

namespace curvex {

namespace {

// Expected lists, compared against what the classifiers derive. They are never
// fed back into the classifiers.
const std::vector<int> kExpectedFails = {18, 19, 22, 27, 28};
const std::vector<int> kExpectedWeak = {23, 32, 33, 37, 38, 39, 42, 43, 44, 48, 49,
                                        52, 55, 56, 59, 63, 64, 65, 72, 73, 77, 89};
const std::vector<int> kExpectedStrong = {40, 45, 57, 58, 60, 61, 66, 68, 69, 74, 75, 76, 78, 79,
                                          80, 81, 83, 84, 85, 86, 87, 90, 91, 92, 93, 94, 95};
const std::vector<int> kExpectedProj2 = {7, 9, 11, 12, 13, 15, 16, 17, 21, 24, 29, 34};
const std::vector<int> kExpectedUnsafe = {2, 5, 7, 8, 12, 13, 16, 18, 20, 24, 25, 26, 46};
const std::vector<int> kExpectedGcd = {18, 22, 28, 43, 52, 59, 69, 73, 81};

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void add_point_values(Route& r, const Case1PointChecks& points) {
  for (const auto& p : points) {
    r.values.emplace_back(p.label, p.curve_degree.str() + (p.contradiction ? " > " : " <= ") +
                                       p.a_cube.str());
  }
}

Route surface_route(CurveClass cls, const SurfaceCertificate& c) {
  Route r{cls, "surface_certificate", to_string(c.validity), c.valid(), {}, {}};
  r.values = {{"curve", c.curve.str()},
              {"method", to_string(c.method)},
              {"m", std::to_string(c.m)},
              {"deg_c", c.deg_c.str()},
              {"diff_total", c.diff_total.str()},
              {"c2t", c.c2t.str()}};
  if (c.exclusion_value) r.values.emplace_back("value", c.exclusion_value->str());
  if (c.companion) {
    r.values.emplace_back("companion_c2t", c.companion->c2t.str());
    r.values.emplace_back("deg_sum", (c.deg_c + c.companion->deg).str());
  }
  r.annotations.push_back(
      {AnnotationKind::SurfaceGeometry,
       "base locus of |mA - C|, smoothness of T along C away from the coordinate points and the "
       "plt condition are taken as given; the index of C in T is the surviving weight"});
  return r;
}

void add_divisibility_routes(FamilyCoverage& cov, const FamilyRecord& f) {
  for (int j : tangent_indices(f)) {
    auto cert = contracted_divisibility_certificate(f, j);
    Route r{CurveClass::Contracted, "contracted_divisibility_certificate", "holds", false, {}, {}};
    r.values.emplace_back("j", std::to_string(j));
    for (const auto& e : cert.entries) {
      std::string which = e.divides_d_minus_a4 ? std::to_string(e.weight) + " | d - a4"
                                               : std::to_string(e.weight) + " | d";
      r.values.emplace_back("a" + std::to_string(e.index), which);
    }
    cov.routes.push_back(std::move(r));
  }
}

// Surface certificates for this family; optionally only those through P4.
std::vector<const SurfaceCertificate*> rows_for(const AuditInputs& in, int family,
                                                bool through_p4) {
  std::vector<const SurfaceCertificate*> out;
  for (const auto& c : in.surface) {
    if (c.family != family) continue;
    if (through_p4 && !c.curve.passes_through(4)) continue;
    out.push_back(&c);
  }
  return out;
}

bool all_close(const std::vector<const SurfaceCertificate*>& certs) {
  return !certs.empty() &&
         std::all_of(certs.begin(), certs.end(), [](const auto* c) { return c->valid(); });
}

void cover_residual(FamilyCoverage& cov, const FamilyRecord& f, const AuditInputs& in) {
  bool closed = false;
  switch (cov.tag) {
    case CaseTag::Case1: {
      auto v = case1_projection_verdict(f);
      if (v.status == ProjectionStatus::Fails) {
        auto ext = extension_report(f);
        Route r{CurveClass::Residual, "extension_checks", "numeric comparisons", true, {}, {}};
        for (const auto& c : ext.checks) {
          r.values.emplace_back(c.label,
                                c.degree.str() + " " + to_string(c.relation) + " " + c.a_cube.str());
        }
        std::string open;
        for (const auto& label : ext.open_cases()) open += (open.empty() ? "" : "; ") + label;
        r.annotations.push_back(
            {AnnotationKind::GeneralityAssumption,
             "cases not closed by degree alone (" + open +
                 ") rely on generality: irreducibility of {x=y=0} and no curve joining two "
                 "singular points lies on X"});
        cov.routes.push_back(std::move(r));
        closed = true;
        break;
      }
      Route r{CurveClass::Residual, "case1_projection_verdict", to_string(v.status), true, {}, {}};
      r.values = {{"d", std::to_string(v.d)},
                  {"a1a4", std::to_string(v.a1a4)},
                  {"a2a4", std::to_string(v.a2a4)}};
      add_point_values(r, v.points);
      if (v.status == ProjectionStatus::Weak) {
        r.annotations.push_back({AnnotationKind::GeneralityAssumption,
                                 "{x=y=0} cut on X is irreducible for general X (Bertini)"});
      }
      cov.routes.push_back(std::move(r));
      closed = true;
      if (has_common_low_weights(f)) {
        auto g = case1_gcd_check(f);
        Route gr{CurveClass::Residual, "case1_gcd_check", g.applies ? "applies" : "fails",
                 g.applies, {}, {}};
        gr.values = {{"gcd", std::to_string(g.gcd)},
                     {"value", g.value.str()},
                     {"a_cube", g.a_cube.str()},
                     {"equality", yes_no(g.equality)}};
        cov.routes.push_back(std::move(gr));
        closed = g.applies;
      }
      break;
    }
    case CaseTag::Case2: {
      if (case2_projection_verdict(f)) {
        Route r{CurveClass::Residual, "case2_projection_verdict", "true", true, {}, {}};
        r.values = {{"d", std::to_string(f.d)},
                    {"a2a4", std::to_string(checked_mul(f.weights[2], f.weights[4]))}};
        cov.routes.push_back(std::move(r));
        closed = true;
      } else {
        auto certs = rows_for(in, f.number, false);
        for (const auto* c : certs) cov.routes.push_back(surface_route(CurveClass::Residual, *c));
        closed = all_close(certs);
      }
      break;
    }
    case CaseTag::Case3: {
      if (case3_integer_degree_filter(f)) {
        Route r{CurveClass::Residual, "case3_integer_degree_filter", "A^3 < 1", true, {}, {}};
        r.values = {{"a_cube", f.a_cube.str()}};
        cov.routes.push_back(std::move(r));
        closed = true;
        break;
      }
      for (const auto& t : in.test_class) {
        if (t.family != f.number) continue;
        Route r{CurveClass::Residual, "test_class_certificate", to_string(t.validity()),
                t.validity() == Validity::Valid, {}, {}};
        r.values = {{"curve", t.curve},
                    {"b", std::to_string(t.b)},
                    {"deg_c", t.deg_c.str()},
                    {"p_a", std::to_string(t.p_a)},
                    {"value", t.value.str()}};
        closed = r.closes;
        cov.routes.push_back(std::move(r));
      }
      break;
    }
  }
  if (!closed) cov.gaps.push_back("residual");
}

void cover_contracted(FamilyCoverage& cov, const FamilyRecord& f, const AuditInputs& in) {
  auto v = contracted_curve_verdict(f);
  if (v.safe) {
    Route r{CurveClass::Contracted, "contracted_curve_verdict", to_string(*v.reason), true, {}, {}};
    r.values = {{"p4_on_x", yes_no(v.p4_on_x)},
                {"d", std::to_string(f.d)},
                {"a1a2a3", std::to_string(v.a1a2a3)}};
    cov.routes.push_back(std::move(r));
    return;
  }
  add_divisibility_routes(cov, f);
  if (cov.tag == CaseTag::Case3) {
    Route r{CurveClass::Contracted, "geometric_containment", "asserted", true, {}, {}};
    r.annotations.push_back(
        {AnnotationKind::GeometricContainment,
         "geometric containment - out of scope: the contracted curves lie in {l = l' = 0} for "
         "two independent linear forms"});
    cov.routes.push_back(std::move(r));
    return;
  }
  auto certs = rows_for(in, f.number, true);
  for (const auto* c : certs) cov.routes.push_back(surface_route(CurveClass::Contracted, *c));
  if (!all_close(certs)) cov.gaps.push_back("contracted");
}

}  // namespace

std::vector<int> DerivedList::missing() const { return set_difference(expected, derived); }
std::vector<int> DerivedList::extra() const { return set_difference(derived, expected); }

std::vector<DerivedList> derive_lists(const FamilyDb& db) {
  std::vector<int> fails, weak, strong, proj2, unsafe, gcds;
  for (const auto& f : db) {
    CaseTag tag = classify_case(f);
    if (tag == CaseTag::Case1) {
      switch (case1_projection_verdict(f).status) {
        case ProjectionStatus::Fails: fails.push_back(f.number); break;
        case ProjectionStatus::Weak: weak.push_back(f.number); break;
        case ProjectionStatus::Strong: strong.push_back(f.number); break;
      }
      if (has_common_low_weights(f)) gcds.push_back(f.number);
    }
    if (tag == CaseTag::Case2 && !case2_projection_verdict(f)) proj2.push_back(f.number);
    if (!contracted_curve_verdict(f).safe) unsafe.push_back(f.number);
  }
  return {
      {"proj1_fails", "a1 > 1 and d >= a2 a4", fails, kExpectedFails},
      {"proj1_weak", "a1 > 1 and a1 a4 <= d < a2 a4", weak, kExpectedWeak},
      {"proj1_strong", "a1 > 1 and d < a1 a4", strong, kExpectedStrong},
      {"proj2_exceptions", "a1 = 1 < a2 and d >= a2 a4", proj2, kExpectedProj2},
      {"contracted_unsafe", "P4 on X and d >= a1 a2 a3", unsafe, kExpectedUnsafe},
      {"gcd_gt_one", "a1 > 1 and gcd(a1, a2) > 1", gcds, kExpectedGcd},
  };
}

std::string to_string(CurveClass c) {
  return c == CurveClass::Residual ? "residual" : "contracted";
}

std::string to_string(AnnotationKind k) {
  switch (k) {
    case AnnotationKind::GeometricContainment: return "geometric_containment";
    case AnnotationKind::GeneralityAssumption: return "generality_assumption";
    case AnnotationKind::SurfaceGeometry: return "surface_geometry";
  }
  return "?";
}

std::string to_string(CoverageStatus s) { return s == CoverageStatus::Covered ? "Covered" : "Gap"; }

bool FamilyCoverage::has_annotation(AnnotationKind kind) const {
  for (const auto& r : routes) {
    for (const auto& a : r.annotations) {
      if (a.kind == kind) return true;
    }
  }
  return false;
}

FamilyCoverage audit_family(const FamilyRecord& f, const AuditInputs& in) {
  FamilyCoverage cov{f.number, classify_case(f), degree_bound(f), {}, {}};
  cover_residual(cov, f, in);
  cover_contracted(cov, f, in);
  return cov;
}

std::vector<FamilyCoverage> audit(const AuditInputs& in) {
  std::vector<FamilyCoverage> out;
  out.reserve(in.db.size());
  for (const auto& f : in.db) out.push_back(audit_family(f, in));
  return out;
}

std::vector<DivisibilityCertificate> divisibility_certificates(const FamilyDb& db) {
  std::vector<DivisibilityCertificate> out;
  for (const auto& f : db) {
    if (contracted_curve_verdict(f).safe) continue;
    for (int j : tangent_indices(f)) out.push_back(contracted_divisibility_certificate(f, j));
  }
  return out;
}

bool FullReport::lists_match() const {
  return std::all_of(lists.begin(), lists.end(), [](const auto& l) { return l.matches(); });
}

bool FullReport::certificates_valid() const {
  return std::all_of(test_class.begin(), test_class.end(),
                     [](const auto& c) { return c.validity() == Validity::Valid; }) &&
         std::all_of(surface.begin(), surface.end(), [](const auto& c) { return c.valid(); });
}

int FullReport::covered() const {
  return static_cast<int>(std::count_if(coverage.begin(), coverage.end(), [](const auto& c) {
    return c.status() == CoverageStatus::Covered;
  }));
}

int FullReport::gaps() const { return static_cast<int>(coverage.size()) - covered(); }

FullReport build_full_report(const FamilyDb& db, std::vector<SurfaceRow> rows) {
  FullReport r;
  r.lists = derive_lists(db);
  r.test_class = certify_test_class_list(db);
  r.surface = verify_surface_rows(db, rows);
  r.rows = std::move(rows);
  r.divisibility = divisibility_certificates(db);
  r.extension = extension_checks(db);
  r.coverage = audit(AuditInputs{db, r.test_class, r.rows, r.surface});
  return r;
}

}  // namespace curvex
