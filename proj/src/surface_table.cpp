#include "curvex/surface_table.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "curvex/errors.hpp"
#include "curvex/lemmas.hpp"

namespace curvex {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t to_int(std::string_view s, const std::string& source, int line, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(source, line,
                     std::string(what) + " is not an integer: '" + std::string(s) + "'");
  }
  return v;
}

std::string tags_str(const std::set<LemmaTag>& tags) {
  std::string out;
  for (auto t : tags) {
    if (!out.empty()) out += ',';
    out += to_string(t);
  }
  return out;
}

}  // namespace

std::string to_string(LemmaTag t) {
  switch (t) {
    case LemmaTag::Proj1: return "proj1";
    case LemmaTag::Proj2: return "proj2";
    case LemmaTag::Contracted: return "contracted";
  }
  return "?";
}

LemmaTag parse_lemma_tag(std::string_view s) {
  if (s == "proj1") return LemmaTag::Proj1;
  if (s == "proj2") return LemmaTag::Proj2;
  if (s == "contracted") return LemmaTag::Contracted;
  throw std::invalid_argument("unknown lemma tag '" + std::string(s) + "'");
}

std::string to_string(SurfaceMethod m) {
  return m == SurfaceMethod::SingleCurve ? "41" : "42";
}

std::vector<SurfaceRow> load_surface_rows(std::istream& in, const std::string& source) {
  std::vector<SurfaceRow> rows;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    auto fields = split(line, '\t');
    if (fields.size() != 5) {
      throw ParseError(source, line_no,
                       "expected 5 tab-separated fields, got " + std::to_string(fields.size()));
    }
    SurfaceRow row{};
    row.line = line_no;
    row.family = static_cast<int>(to_int(fields[0], source, line_no, "family"));

    auto coords = split(fields[1], ',');
    if (coords.size() != 3) {
      throw ParseError(source, line_no, "vanishing_coords needs exactly three indices");
    }
    for (std::size_t i = 0; i < 3; ++i) {
      auto c = to_int(coords[i], source, line_no, "coordinate index");
      if (c < 0 || c >= kCoordinates) {
        throw ParseError(source, line_no, "coordinate index out of range 0..4");
      }
      row.vanishing[i] = static_cast<int>(c);
    }
    std::sort(row.vanishing.begin(), row.vanishing.end());
    if (row.vanishing[0] == row.vanishing[1] || row.vanishing[0] == row.vanishing[2] ||
        row.vanishing[1] == row.vanishing[2]) {
      throw ParseError(source, line_no, "vanishing coordinates must be distinct");
    }

    for (auto tag : split(fields[2], ',')) {
      try {
        row.fails.insert(parse_lemma_tag(tag));
      } catch (const std::invalid_argument& e) {
        throw ParseError(source, line_no, e.what());
      }
    }

    auto method = to_int(fields[3], source, line_no, "method");
    if (method != 41 && method != 42) throw ParseError(source, line_no, "method must be 41 or 42");
    row.method = static_cast<SurfaceMethod>(method);

    row.m = to_int(fields[4], source, line_no, "m");
    if (row.m < 1) throw ParseError(source, line_no, "m must be positive");
    rows.push_back(std::move(row));
  }
  if (in.bad()) throw IoError("read failure on " + source);
  return rows;
}

std::vector<SurfaceRow> load_surface_rows_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open table file: " + path.string());
  return load_surface_rows(in, path.string());
}

void serialize_surface_rows(const std::vector<SurfaceRow>& rows, std::ostream& out) {
  for (const auto& r : rows) {
    out << r.family << '\t' << r.vanishing[0] << ',' << r.vanishing[1] << ',' << r.vanishing[2]
        << '\t' << tags_str(r.fails) << '\t' << to_string(r.method) << '\t' << r.m << '\n';
  }
}

std::set<LemmaTag> derived_failures(const FamilyRecord& f) {
  std::set<LemmaTag> out;
  switch (classify_case(f)) {
    case CaseTag::Case1:
      if (case1_projection_verdict(f).status == ProjectionStatus::Fails) out.insert(LemmaTag::Proj1);
      break;
    case CaseTag::Case2:
      if (!case2_projection_verdict(f)) out.insert(LemmaTag::Proj2);
      break;
    case CaseTag::Case3:
      break;
  }
  if (!contracted_curve_verdict(f).safe) out.insert(LemmaTag::Contracted);
  return out;
}

std::vector<std::int64_t> stratum_diff_indices(const StratumCurve& c) {
  std::vector<std::int64_t> out;
  for (auto w : c.surviving_weights()) {
    if (w > 1) out.push_back(w);
  }
  return out;
}

SurfaceCertificate certify_surface_row(const FamilyRecord& f, const SurfaceRow& row) {
  StratumCurve curve(f.weights, row.vanishing);
  Rational deg = stratum_degree(curve);
  auto indices = stratum_diff_indices(curve);
  Rational diff = different_total(indices);
  Rational c2t = curve_self_intersection(row.m, deg, diff);

  SurfaceCertificate cert{f.number, curve, row.m,  row.method,   f.a_cube, deg,
                          indices,  diff,  c2t,    std::nullopt, std::nullopt, Validity::Invalid};
  if (row.method == SurfaceMethod::SingleCurve) {
    Rational value = surface_exclusion_value(row.m, f.a_cube, deg, c2t);
    cert.exclusion_value = value;
    cert.validity = sign_validity(value);
  } else {
    // C' is C after a coordinate change, so it has the same degree and C'^2.
    auto pair = two_curve_certificate(f.a_cube, deg, deg, c2t);
    cert.companion = CompanionCurve{deg, c2t, pair.forces_alpha_one, pair.degree_contradiction};
    if (pair.valid()) {
      cert.validity = Validity::Valid;
    } else if (c2t.is_zero() || deg + deg == f.a_cube) {
      cert.validity = Validity::Boundary;
    }
  }
  return cert;
}

std::vector<SurfaceCertificate> verify_surface_rows(const FamilyDb& db,
                                                    const std::vector<SurfaceRow>& rows) {
  std::vector<SurfaceCertificate> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    const auto& f = db.get(row.family);
    auto derived = derived_failures(f);
    if (derived != row.fails) {
      throw TableMismatchError("row at line " + std::to_string(row.line) + ", family " +
                               std::to_string(row.family) + ": fails column '" +
                               tags_str(row.fails) + "' but the lemma engine derives '" +
                               tags_str(derived) + "'");
    }
    out.push_back(certify_surface_row(f, row));
  }
  return out;
}

std::string SurfaceCertificate::describe() const {
  std::ostringstream os;
  os << "family " << family << " C=" << curve.str() << " method " << to_string(method)
     << " |" << m << "A - C|: A^3 = " << a_cube << ", deg C = " << deg_c << ", Diff = "
     << diff_total << ", C^2_T = " << c2t;
  if (exclusion_value) os << ", value = " << *exclusion_value;
  if (companion) {
    os << ", C'^2_T = " << companion->c2t << ", deg C + deg C' = " << deg_c + companion->deg
       << (companion->forces_alpha_one ? " [alpha = 1]" : " [alpha free]")
       << (companion->degree_contradiction ? " [> A^3]" : " [<= A^3]");
  }
  os << " -> " << to_string(validity);
  return os.str();
}

}  // namespace curvex
