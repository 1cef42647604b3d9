#include <fstream>
#include <sstream>

#include "curvex/errors.hpp"
#include "curvex/family_db.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace curvex;

namespace {

std::string shipped_text() {
  std::ifstream in(data_path("families.tsv"));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string canonical(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out += line + "\n";
  }
  return out;
}

std::string replace_line(const std::string& text, const std::string& from, const std::string& to) {
  std::string out = text;
  auto pos = out.find(from);
  REQUIRE(pos != std::string::npos);
  out.replace(pos, from.size(), to);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("family_db");

TEST_CASE("single line parsing") {
  auto f3 = parse_family_line("3\t6\t1\t1\t1\t1\t3");
  CHECK(f3.number == 3);
  CHECK(f3.d == 6);
  CHECK(f3.weights == Weights({1, 1, 1, 1, 3}));
  CHECK(f3.a_cube == Rational(2));

  auto f75 = parse_family_line("75\t30\t1\t4\t5\t6\t15");
  CHECK(f75.a_cube == Rational(1, 60));

  try {
    parse_family_line("3\t7\t1\t1\t1\t1\t3");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.family() == 3);
    CHECK(e.invariant() == "d = sum(a_i)");
  }
  CHECK_THROWS_AS(parse_family_line("3\t6\t1\t1\t1\t1"), ParseError);
  CHECK_THROWS_AS(parse_family_line("3\tsix\t1\t1\t1\t1\t3"), ParseError);
  CHECK_THROWS_AS(parse_family_line("96\t6\t1\t1\t1\t1\t3"), ValidationError);
}

TEST_CASE("shipped database loads with every invariant") {
  const auto& db = shipped_db();
  REQUIRE(db.size() == 95);
  int expected = 1;
  for (const auto& f : db) {
    CHECK(f.number == expected++);
    CHECK(f.d == f.weights[1] + f.weights[2] + f.weights[3] + f.weights[4]);
    CHECK(f.a_cube == Rational(f.d, f.weights[1] * f.weights[2] * f.weights[3] * f.weights[4]));
    CHECK(is_well_formed(f.weights.values()));
  }
}

TEST_CASE("spot anchors") {
  const auto& db = shipped_db();
  CHECK(db.get(1).d == 4);
  CHECK(db.get(1).weights == Weights({1, 1, 1, 1, 1}));
  CHECK(db.get(4).a_cube == Rational(3, 2));
  CHECK(db.get(5).a_cube == Rational(7, 6));
  CHECK(db.get(6).a_cube == Rational(1));
  CHECK(db.get(8).d == 9);
  CHECK(db.get(8).weights == Weights({1, 1, 1, 3, 4}));
  CHECK(db.get(8).a_cube == Rational(3, 4));
  CHECK(db.get(19).d == 12);
  CHECK(db.get(19).weights == Weights({1, 2, 3, 3, 4}));
  CHECK(db.get(19).a_cube == Rational(1, 6));
  CHECK(db.get(25).d == 15);
  CHECK(db.get(25).weights == Weights({1, 1, 3, 4, 7}));
  CHECK(db.get(36).d == 18);
  CHECK(db.get(36).weights == Weights({1, 1, 4, 6, 7}));
  CHECK(db.get(43).d == 20);
  CHECK(db.get(43).weights == Weights({1, 2, 4, 5, 9}));
  CHECK(db.get(43).a_cube == Rational(1, 18));
}

TEST_CASE("get_family") {
  const auto& db = shipped_db();
  CHECK(db.get(20).d == 13);
  CHECK(db.get(20).weights == Weights({1, 1, 3, 4, 5}));
  CHECK(db.get(29).d == 16);
  CHECK(db.get(29).weights == Weights({1, 1, 2, 5, 8}));
  CHECK_THROWS_AS(db.get(96), NotFoundError);
  CHECK_THROWS_AS(db.get(0), NotFoundError);
}

TEST_CASE("serialize reproduces the canonical form") {
  std::string text = shipped_text();
  std::istringstream in(text);
  auto db = FamilyDb::load(in);
  std::ostringstream out;
  db.serialize(out);
  CHECK(out.str() == canonical(text));

  std::istringstream again(out.str());
  std::ostringstream out2;
  FamilyDb::load(again).serialize(out2);
  CHECK(out2.str() == out.str());
}

TEST_CASE("load errors") {
  std::string text = shipped_text();

  SUBCASE("wrong degree names the invariant and family") {
    std::istringstream in(replace_line(text, "3\t6\t1\t1\t1\t1\t3", "3\t7\t1\t1\t1\t1\t3"));
    try {
      FamilyDb::load(in);
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(e.family() == 3);
      CHECK(std::string(e.what()).find("d = sum(a_i)") != std::string::npos);
    }
  }
  SUBCASE("94 records") {
    std::istringstream in(replace_line(text, "95\t66\t1\t5\t6\t22\t33\n", ""));
    CHECK_THROWS_AS(FamilyDb::load(in), CountError);
  }
  SUBCASE("malformed line carries its line number") {
    std::istringstream in(replace_line(text, "10\t10\t1\t1\t1\t3\t5", "10\t10\t1\t1\t1\t3"));
    try {
      FamilyDb::load(in, "fams");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 13);
      CHECK(std::string(e.what()).rfind("fams:13:", 0) == 0);
    }
  }
  SUBCASE("out of order") {
    std::istringstream in(replace_line(text, "11\t10\t1\t1\t2\t2\t5", "12\t10\t1\t1\t2\t3\t4"));
    CHECK_THROWS_AS(FamilyDb::load(in), ValidationError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(FamilyDb::load_file("/nonexistent/families.tsv"), IoError);
  }
}

TEST_SUITE_END();
