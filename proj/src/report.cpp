#include "curvex/report.hpp"

#include <ostream>

namespace curvex::report {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (int x : v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

Rational rat(const json& j) { return Rational::parse(j.get<std::string>()); }

}  // namespace

json families_json(const FamilyDb& db) {
  json out = json::array();
  for (const auto& f : db) {
    out.push_back({{"number", f.number},
                   {"d", f.d},
                   {"weights", f.weights.values()},
                   {"a_cube", f.a_cube.fraction()},
                   {"case", to_string(classify_case(f))}});
  }
  return out;
}

json lists_json(const std::vector<DerivedList>& lists) {
  json out = json::object();
  for (const auto& l : lists) {
    out[l.name] = {{"description", l.description},
                   {"derived", l.derived},
                   {"expected", l.expected},
                   {"match", l.matches()}};
  }
  return out;
}

json test_class_json(const TestClassCertificate& c) {
  return {{"family", c.family},
          {"curve", c.curve},
          {"b", c.b},
          {"a_cube", c.a_cube.fraction()},
          {"deg_c", c.deg_c.fraction()},
          {"p_a", c.p_a},
          {"value", c.value.fraction()},
          {"validity", to_string(c.validity())}};
}

json surface_json(const SurfaceCertificate& c) {
  json j = {{"family", c.family},
            {"vanishing", c.curve.vanishing()},
            {"surviving_weights", c.curve.surviving_weights()},
            {"m", c.m},
            {"method", to_string(c.method)},
            {"a_cube", c.a_cube.fraction()},
            {"deg_c", c.deg_c.fraction()},
            {"diff_indices", c.diff_indices},
            {"diff_total", c.diff_total.fraction()},
            {"c2t", c.c2t.fraction()},
            {"validity", to_string(c.validity)}};
  if (c.exclusion_value) j["exclusion_value"] = c.exclusion_value->fraction();
  if (c.companion) {
    j["companion"] = {{"deg", c.companion->deg.fraction()},
                      {"c2t", c.companion->c2t.fraction()},
                      {"forces_alpha_one", c.companion->forces_alpha_one},
                      {"degree_contradiction", c.companion->degree_contradiction}};
  }
  return j;
}

json divisibility_json(const DivisibilityCertificate& c) {
  json entries = json::array();
  for (const auto& e : c.entries) {
    entries.push_back({{"index", e.index},
                       {"weight", e.weight},
                       {"divides_d_minus_a4", e.divides_d_minus_a4},
                       {"divides_d", e.divides_d}});
  }
  return {{"family", c.family}, {"j", c.j}, {"d", c.d}, {"a4", c.a4}, {"entries", entries}};
}

json extension_json(const ExtensionReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"label", c.label},
                      {"degree", c.degree.fraction()},
                      {"relation", to_string(c.relation)},
                      {"contradiction", c.contradiction()}});
  }
  return {{"family", r.family}, {"a_cube", r.a_cube.fraction()}, {"checks", checks}};
}

json certificates_json(const std::vector<TestClassCertificate>& test_class,
                       const std::vector<SurfaceCertificate>& surface,
                       const std::vector<DivisibilityCertificate>& divisibility,
                       const std::vector<ExtensionReport>& extension) {
  json out = {{"test_class", json::array()},
              {"surface", json::array()},
              {"divisibility", json::array()},
              {"extension", json::array()}};
  for (const auto& c : test_class) out["test_class"].push_back(test_class_json(c));
  for (const auto& c : surface) out["surface"].push_back(surface_json(c));
  for (const auto& c : divisibility) out["divisibility"].push_back(divisibility_json(c));
  for (const auto& r : extension) out["extension"].push_back(extension_json(r));
  return out;
}

json coverage_json(const std::vector<FamilyCoverage>& coverage) {
  json out = json::array();
  for (const auto& cov : coverage) {
    json routes = json::array();
    for (const auto& r : cov.routes) {
      json values = json::object();
      for (const auto& [k, v] : r.values) values[k] = v;
      json notes = json::array();
      for (const auto& a : r.annotations) notes.push_back({{"kind", to_string(a.kind)}, {"text", a.text}});
      routes.push_back({{"curve_class", to_string(r.curve_class)},
                        {"operation", r.operation},
                        {"verdict", r.verdict},
                        {"closes", r.closes},
                        {"values", values},
                        {"annotations", notes}});
    }
    out.push_back({{"family", cov.family},
                   {"case", to_string(cov.tag)},
                   {"degree_bound", cov.degree_bound.fraction()},
                   {"status", to_string(cov.status())},
                   {"routes", routes},
                   {"gaps", cov.gaps}});
  }
  return out;
}

json full_json(const FamilyDb& db, const FullReport& r) {
  return {{"families", families_json(db)},
          {"certificates", certificates_json(r.test_class, r.surface, r.divisibility, r.extension)},
          {"lists", lists_json(r.lists)},
          {"coverage", coverage_json(r.coverage)}};
}

bool revalidate_test_class(const json& j) {
  try {
    auto b = j.at("b").get<std::int64_t>();
    auto p_a = j.at("p_a").get<std::int64_t>();
    Rational a_cube = rat(j.at("a_cube"));
    Rational deg = rat(j.at("deg_c"));
    Rational value = test_class_value(b, a_cube, deg, p_a);
    if (value != test_class_value_expanded(b, a_cube, deg, p_a)) return false;
    return value == rat(j.at("value")) &&
           to_string(sign_validity(value)) == j.at("validity").get<std::string>();
  } catch (const std::exception&) {
    return false;
  }
}

bool revalidate_surface(const json& j) {
  try {
    auto m = j.at("m").get<std::int64_t>();
    auto w = j.at("surviving_weights").get<std::vector<std::int64_t>>();
    if (w.size() != 2) return false;
    Rational a_cube = rat(j.at("a_cube"));
    Rational deg(1, checked_mul(w[0], w[1]));
    if (deg != rat(j.at("deg_c"))) return false;

    std::vector<std::int64_t> expected_indices;
    for (auto x : w) {
      if (x > 1) expected_indices.push_back(x);
    }
    auto indices = j.at("diff_indices").get<std::vector<std::int64_t>>();
    if (indices != expected_indices) return false;
    Rational diff = different_total(indices);
    if (diff != rat(j.at("diff_total"))) return false;
    Rational c2t = curve_self_intersection(m, deg, diff);
    if (c2t != rat(j.at("c2t"))) return false;

    Validity verdict = Validity::Invalid;
    const auto method = j.at("method").get<std::string>();
    if (method == "41") {
      Rational value = surface_exclusion_value(m, a_cube, deg, c2t);
      if (value != rat(j.at("exclusion_value"))) return false;
      verdict = sign_validity(value);
    } else if (method == "42") {
      const auto& comp = j.at("companion");
      Rational comp_deg = rat(comp.at("deg"));
      Rational comp_c2t = rat(comp.at("c2t"));
      auto pair = two_curve_certificate(a_cube, deg, comp_deg, comp_c2t);
      if (pair.forces_alpha_one != comp.at("forces_alpha_one").get<bool>() ||
          pair.degree_contradiction != comp.at("degree_contradiction").get<bool>()) {
        return false;
      }
      if (pair.valid()) {
        verdict = Validity::Valid;
      } else if (comp_c2t.is_zero() || deg + comp_deg == a_cube) {
        verdict = Validity::Boundary;
      }
    } else {
      return false;
    }
    return to_string(verdict) == j.at("validity").get<std::string>();
  } catch (const std::exception&) {
    return false;
  }
}

void print_lists(std::ostream& os, const std::vector<DerivedList>& lists) {
  for (const auto& l : lists) {
    os << l.name << " (" << l.description << "): " << join(l.derived);
    if (l.matches()) {
      os << "  [match]\n";
    } else {
      os << "  [MISMATCH missing: " << join(l.missing()) << "; extra: " << join(l.extra())
         << "]\n";
    }
  }
}

void print_certificates(std::ostream& os, const std::vector<TestClassCertificate>& test_class,
                        const std::vector<SurfaceCertificate>& surface,
                        const std::vector<DivisibilityCertificate>& divisibility,
                        const std::vector<ExtensionReport>& extension) {
  os << "# test-class certificates (M = bA - E)\n";
  for (const auto& c : test_class) {
    os << "family " << c.family << " C = " << c.curve << ": b = " << c.b << ", A^3 = " << c.a_cube
       << ", deg C = " << c.deg_c << ", p_a = " << c.p_a << ", MB² = " << c.value << " -> "
       << to_string(c.validity()) << '\n';
  }
  os << "# surface certificates\n";
  for (const auto& c : surface) {
    os << "family " << c.family << " C = " << c.curve.str() << " |" << c.m << "A - C| method "
       << to_string(c.method) << ": A^3 = " << c.a_cube << ", deg C = " << c.deg_c
       << ", Diff = " << c.diff_total << ", C²_T = " << c.c2t;
    if (c.exclusion_value) os << ", value = " << *c.exclusion_value;
    if (c.companion) {
      os << ", C'²_T = " << c.companion->c2t << ", deg C + deg C' = "
         << c.deg_c + c.companion->deg << " (alpha forced: "
         << (c.companion->forces_alpha_one ? "yes" : "no")
         << ", exceeds A^3: " << (c.companion->degree_contradiction ? "yes" : "no") << ")";
    }
    os << " -> " << to_string(c.validity) << '\n';
  }
  os << "# divisibility certificates (tangent monomial x_j x4^2)\n";
  for (const auto& c : divisibility) {
    os << "family " << c.family << " j = " << c.j << ":";
    if (c.entries.empty()) os << " no reduced weight > 1";
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      const auto& e = c.entries[i];
      os << (i ? "; " : " ") << e.weight << (e.divides_d_minus_a4 ? " | d - a4 = " : " | d = ")
         << (e.divides_d_minus_a4 ? c.d - c.a4 : c.d);
    }
    os << '\n';
  }
  os << "# degree comparisons for a1 > 1, d >= a2 a4\n";
  for (const auto& r : extension) {
    os << "family " << r.family << " (A^3 = " << r.a_cube << "):";
    for (const auto& c : r.checks) {
      os << "  [" << c.label << "] " << c.degree << ' ' << to_string(c.relation) << " A^3";
    }
    os << '\n';
  }
}

void print_coverage(std::ostream& os, const std::vector<FamilyCoverage>& coverage) {
  int covered = 0;
  for (const auto& cov : coverage) {
    covered += cov.status() == CoverageStatus::Covered;
    os << "family " << cov.family << ' ' << to_string(cov.tag) << " A^3 = " << cov.degree_bound
       << ": " << to_string(cov.status()) << '\n';
    for (const auto& r : cov.routes) {
      os << "  " << to_string(r.curve_class) << ": " << r.operation << " -> " << r.verdict
         << (r.closes ? "" : " (supporting)") << '\n';
      for (const auto& a : r.annotations) {
        os << "    note [" << to_string(a.kind) << "] " << a.text << '\n';
      }
    }
    for (const auto& g : cov.gaps) os << "  GAP: " << g << '\n';
  }
  os << "Covered: " << covered << ", Gap: " << coverage.size() - covered << '\n';
}

}  // namespace curvex::report
