#pragma once

#include <array>
#include <string>
#include <vector>

#include "curvex/family_db.hpp"

namespace curvex {

// The five families with a1 > 1 and d >= a2 a4.
inline constexpr std::array<int, 5> kExtensionFamilies = {18, 19, 22, 27, 28};

enum class Relation { Less, Equal, Greater };

std::string to_string(Relation r);  // "<" | "=" | ">"

// A degree compared against A^3. Greater is a contradiction; Equal or Less
// means the case needs a geometric argument the engine does not check.
struct ExtensionCheck {
  std::string label;
  Rational degree;
  Rational a_cube;
  Relation relation;

  bool contradiction() const { return relation == Relation::Greater; }
};

struct ExtensionReport {
  int family;
  Rational a_cube;
  std::vector<ExtensionCheck> checks;

  // Labels of the checks that do not close numerically.
  std::vector<std::string> open_cases() const;
};

// Degree comparisons for the projection argument P(1,a1,..,a4) -> P(1,a1,a2),
// in order:
//   image curve in P(1,a1,a2)      1/(a1 a2)
//   y=z=0                          1/a3
//   y^a2+z^a1=x=0                  1/(a3 gcd(a1,a2))
//   x=z=0                          1/(a1 a3)
//   x=y=0                          a1 A^3
ExtensionReport extension_report(const FamilyRecord& f);

std::vector<ExtensionReport> extension_checks(const FamilyDb& db);

}  // namespace curvex
