#include <sstream>

#include "curvex/errors.hpp"
#include "curvex/extension.hpp"
#include "curvex/surface_table.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace curvex;

namespace {

std::vector<SurfaceRow> parse(const std::string& text) {
  std::istringstream in(text);
  return load_surface_rows(in, "rows");
}

bool same(const Rational& r, const oracle::Frac& f) { return r.num() == f.num() && r.den() == f.den(); }

}  // namespace

TEST_SUITE_BEGIN("surface_table");

TEST_CASE("row parsing") {
  auto rows = parse("# header\n7\t0,3,2\tproj2,contracted\t41\t2\n\n15\t0,2,4\tproj2\t42\t2\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].family == 7);
  CHECK(rows[0].vanishing == std::array<int, 3>{0, 2, 3});
  CHECK(rows[0].fails == std::set<LemmaTag>{LemmaTag::Proj2, LemmaTag::Contracted});
  CHECK(rows[0].method == SurfaceMethod::SingleCurve);
  CHECK(rows[0].line == 2);
  CHECK(rows[1].method == SurfaceMethod::CurvePair);
  CHECK(rows[1].line == 4);

  std::ostringstream out;
  serialize_surface_rows(rows, out);
  auto again = parse(out.str());
  REQUIRE(again.size() == 2);
  CHECK(again[0].vanishing == rows[0].vanishing);
  CHECK(again[1].fails == rows[1].fails);
}

TEST_CASE("row parsing errors") {
  CHECK_THROWS_AS(parse("7\t0,2,3\tproj2\t41\n"), ParseError);
  CHECK_THROWS_AS(parse("7\t0,2\tproj2\t41\t2\n"), ParseError);
  CHECK_THROWS_AS(parse("7\t0,2,5\tproj2\t41\t2\n"), ParseError);
  CHECK_THROWS_AS(parse("7\t0,2,2\tproj2\t41\t2\n"), ParseError);
  CHECK_THROWS_AS(parse("7\t0,2,3\tlemma9\t41\t2\n"), ParseError);
  CHECK_THROWS_AS(parse("7\t0,2,3\tproj2\t43\t2\n"), ParseError);
  CHECK_THROWS_AS(parse("7\t0,2,3\tproj2\t41\t0\n"), ParseError);
  try {
    parse("# c\n7\t0,2,3\tproj2\t41\t2\n7\t0,2,3\tproj2\tx\t2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(load_surface_rows_file("/nonexistent/table.tsv"), IoError);
}

TEST_CASE("lemma tags") {
  CHECK(to_string(LemmaTag::Proj1) == "proj1");
  CHECK(parse_lemma_tag("contracted") == LemmaTag::Contracted);
  CHECK(to_string(SurfaceMethod::CurvePair) == "42");
}

TEST_CASE("diff indices") {
  const auto& f7 = shipped_db().get(7);
  CHECK(stratum_diff_indices(StratumCurve(f7.weights, {0, 2, 3})) == std::vector<std::int64_t>{3});
  const auto& f9 = shipped_db().get(9);  // (1,1,2,3,3)
  CHECK(stratum_diff_indices(StratumCurve(f9.weights, {0, 3, 4})) == std::vector<std::int64_t>{2});
  CHECK(stratum_diff_indices(StratumCurve(f9.weights, {0, 1, 2})) ==
        std::vector<std::int64_t>{3, 3});
  const auto& f1 = shipped_db().get(1);
  CHECK(stratum_diff_indices(StratumCurve(f1.weights, {0, 1, 2})).empty());
}

TEST_CASE("shipped rows: every certificate valid and matching the oracle") {
  // expected values computed once with oracle::surface and frozen here
  struct Expect {
    int family;
    std::array<int, 3> vanishing;
    Rational value;
  };
  const std::vector<Expect> single = {
      {7, {0, 2, 3}, Rational(-1)},        {7, {0, 2, 4}, Rational(-3, 2)},
      {9, {0, 2, 3}, Rational(-7, 6)},     {9, {0, 3, 4}, Rational(-2)},
      {11, {0, 2, 4}, Rational(-2)},       {12, {0, 2, 3}, Rational(-1)},
      {12, {0, 2, 4}, Rational(-4, 3)},    {13, {0, 2, 3}, Rational(-9, 10)},
      {13, {0, 2, 4}, Rational(-3, 2)},    {16, {0, 2, 3}, Rational(-1)},
      {17, {0, 2, 3}, Rational(-3, 2)},    {20, {0, 2, 3}, Rational(-4, 3)},
      {21, {0, 2, 4}, Rational(-3, 2)},    {24, {1, 2, 3}, Rational(-13, 14)},
      {25, {1, 2, 3}, Rational(-8, 7)},    {26, {0, 2, 3}, Rational(-4, 3)},
      {46, {1, 2, 3}, Rational(-6, 5)},    {18, {1, 2, 3}, Rational(-7, 5)},
  };
  const std::vector<std::pair<int, Rational>> pair = {
      {15, Rational(-5, 3)}, {29, Rational(-7, 5)}, {34, Rational(-4, 3)}};

  const auto& rows = shipped_rows();
  auto certs = verify_surface_rows(shipped_db(), rows);
  REQUIRE(certs.size() == rows.size());
  CHECK(rows.size() == single.size() + pair.size());

  std::size_t seen_single = 0, seen_pair = 0;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const auto& c = certs[i];
    INFO(c.describe());
    CHECK(c.valid());
    auto w = c.curve.surviving_weights();
    auto o = oracle::surface(w[0], w[1], c.m, oracle::Frac(c.a_cube.num(), c.a_cube.den()));
    CHECK(same(c.deg_c, o.deg));
    CHECK(same(c.diff_total, o.diff));
    CHECK(same(c.c2t, o.c2t));
    if (c.method == SurfaceMethod::SingleCurve) {
      REQUIRE(c.exclusion_value);
      CHECK(same(*c.exclusion_value, o.value));
      bool found = false;
      for (const auto& e : single) {
        if (e.family == c.family && e.vanishing == c.curve.vanishing()) {
          CHECK(*c.exclusion_value == e.value);
          found = true;
        }
      }
      CHECK(found);
      ++seen_single;
    } else {
      REQUIRE(c.companion);
      bool found = false;
      for (const auto& [fam, c2] : pair) {
        if (fam == c.family) {
          CHECK(c.c2t == c2);
          found = true;
        }
      }
      CHECK(found);
      CHECK(c.companion->forces_alpha_one);
      CHECK(c.companion->degree_contradiction);
      ++seen_pair;
    }
  }
  CHECK(seen_single == single.size());
  CHECK(seen_pair == pair.size());
}

TEST_CASE("derived failures") {
  const auto& db = shipped_db();
  CHECK(derived_failures(db.get(7)) == std::set<LemmaTag>{LemmaTag::Proj2, LemmaTag::Contracted});
  CHECK(derived_failures(db.get(18)) == std::set<LemmaTag>{LemmaTag::Proj1, LemmaTag::Contracted});
  CHECK(derived_failures(db.get(9)) == std::set<LemmaTag>{LemmaTag::Proj2});
}

TEST_CASE("mismatched fails column") {
  auto rows = parse("9\t0,2,3\tproj2,contracted\t41\t3\n");
  CHECK_THROWS_AS(verify_surface_rows(shipped_db(), rows), TableMismatchError);
  auto unknown = parse("96\t0,2,3\tproj2\t41\t3\n");
  CHECK_THROWS_AS(verify_surface_rows(shipped_db(), unknown), NotFoundError);
}

TEST_CASE("invalid multiple is reported, not thrown") {
  // m = 5 is the boundary for family 7, m = 6 overshoots
  auto rows = parse("7\t0,2,3\tproj2,contracted\t41\t5\n7\t0,2,3\tproj2,contracted\t41\t6\n");
  auto certs = verify_surface_rows(shipped_db(), rows);
  REQUIRE(certs.size() == 2);
  CHECK(certs[0].validity == Validity::Boundary);
  CHECK_FALSE(certs[0].valid());
  CHECK(certs[1].validity == Validity::Invalid);
}

TEST_CASE("extension checks") {
  auto reports = extension_checks(shipped_db());
  REQUIRE(reports.size() == kExtensionFamilies.size());
  for (std::size_t i = 0; i < reports.size(); ++i) CHECK(reports[i].family == kExtensionFamilies[i]);

  const auto& r19 = reports[1];
  CHECK(r19.a_cube == Rational(1, 6));
  REQUIRE(r19.checks.size() == 5);
  CHECK(r19.checks[0].degree == Rational(1, 6));
  CHECK(r19.checks[0].relation == Relation::Equal);
  CHECK(r19.checks[1].degree == Rational(1, 3));
  CHECK(r19.checks[1].contradiction());
  CHECK(r19.checks[2].degree == Rational(1, 3));
  CHECK(r19.checks[3].relation == Relation::Equal);
  CHECK(r19.checks[4].degree == Rational(1, 3));
  CHECK(r19.checks[4].contradiction());
  CHECK(r19.open_cases().size() == 2);

  // family 18: gcd(2,2) = 2 halves the complete-intersection degree
  CHECK(reports[0].checks[2].degree == Rational(1, 6));
}

TEST_SUITE_END();
