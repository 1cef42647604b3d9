#include "curvex/extension.hpp"

namespace curvex {

namespace {

ExtensionCheck check(std::string label, const Rational& degree, const Rational& a_cube) {
  Relation rel = degree < a_cube ? Relation::Less
                                 : (degree == a_cube ? Relation::Equal : Relation::Greater);
  return ExtensionCheck{std::move(label), degree, a_cube, rel};
}

}  // namespace

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::Equal: return "=";
    case Relation::Greater: return ">";
  }
  return "?";
}

std::vector<std::string> ExtensionReport::open_cases() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.contradiction()) out.push_back(c.label);
  }
  return out;
}

ExtensionReport extension_report(const FamilyRecord& f) {
  const auto& w = f.weights;
  const Rational& a3 = f.a_cube;
  std::int64_t g = gcd(w[1], w[2]);
  return ExtensionReport{
      f.number,
      a3,
      {
          check("image curve in P(1,a1,a2)", Rational(1, checked_mul(w[1], w[2])), a3),
          check("y=z=0", Rational(1, w[3]), a3),
          check("y^a2+z^a1=x=0", Rational(1, checked_mul(w[3], g)), a3),
          check("x=z=0", Rational(1, checked_mul(w[1], w[3])), a3),
          check("x=y=0", Rational(w[1]) * a3, a3),
      },
  };
}

std::vector<ExtensionReport> extension_checks(const FamilyDb& db) {
  std::vector<ExtensionReport> out;
  for (int n : kExtensionFamilies) out.push_back(extension_report(db.get(n)));
  return out;
}

}  // namespace curvex
