#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curvex/certificates.hpp"
#include "curvex/family_db.hpp"

namespace curvex {

// Which low-degree lemma a family falls outside of.
enum class LemmaTag { Proj1, Proj2, Contracted };

std::string to_string(LemmaTag t);  // "proj1" | "proj2" | "contracted"
LemmaTag parse_lemma_tag(std::string_view s);

// 41: single curve, (A|_T - C)^2 < 0.  42: curve pair C + C' = A|_T.
enum class SurfaceMethod { SingleCurve = 41, CurvePair = 42 };

std::string to_string(SurfaceMethod m);  // "41" | "42"

struct SurfaceRow {
  int family;
  std::array<int, 3> vanishing;
  std::set<LemmaTag> fails;
  SurfaceMethod method;
  std::int64_t m;
  int line = 0;
};

// Row TSV: "family<TAB>vanishing<TAB>fails<TAB>method<TAB>m", '#' comments.
std::vector<SurfaceRow> load_surface_rows(std::istream& in, const std::string& source = "<stream>");
std::vector<SurfaceRow> load_surface_rows_file(const std::filesystem::path& path);
void serialize_surface_rows(const std::vector<SurfaceRow>& rows, std::ostream& out);

// Lemmas the engine says this family falls outside of.
std::set<LemmaTag> derived_failures(const FamilyRecord& f);

struct CompanionCurve {
  Rational deg;
  Rational c2t;
  bool forces_alpha_one;
  bool degree_contradiction;
};

struct SurfaceCertificate {
  int family;
  StratumCurve curve;
  std::int64_t m;
  SurfaceMethod method;
  Rational a_cube;
  Rational deg_c;
  std::vector<std::int64_t> diff_indices;
  Rational diff_total;
  Rational c2t;
  std::optional<Rational> exclusion_value;   // SingleCurve
  std::optional<CompanionCurve> companion;   // CurvePair
  Validity validity;

  bool valid() const { return validity == Validity::Valid; }
  // One line with every intermediate value.
  std::string describe() const;
};

// Index of C in T at the coordinate points on C: the surviving weights > 1.
std::vector<std::int64_t> stratum_diff_indices(const StratumCurve& c);

// Builds the certificate for one row. Never throws on an invalid result; the
// verdict is in `validity`.
SurfaceCertificate certify_surface_row(const FamilyRecord& f, const SurfaceRow& row);

// Runs every row in order. Throws TableMismatchError if a row's fails column
// disagrees with derived_failures, NotFoundError for unknown families.
std::vector<SurfaceCertificate> verify_surface_rows(const FamilyDb& db,
                                                    const std::vector<SurfaceRow>& rows);

}  // namespace curvex
