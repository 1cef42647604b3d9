#include "curvex/family_db.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "curvex/errors.hpp"

namespace curvex {

namespace {

constexpr int kColumns = 2 + kCoordinates;

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

std::int64_t parse_field(std::string_view field, const std::string& source, int line,
                         const char* name) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(source, line,
                     std::string("field '") + name + "' is not an integer: '" +
                         std::string(field) + "'");
  }
  return v;
}

}  // namespace

std::string FamilyRecord::str() const {
  return "X_" + std::to_string(d) + " in P" + weights.str();
}

FamilyRecord make_family(int number, std::int64_t d, const Weights& w) {
  if (number < 1 || number > kFamilyCount) {
    throw ValidationError(number, "family number in 1..95", "");
  }
  if (d != w.anticanonical_degree()) {
    throw ValidationError(number, "d = sum(a_i)",
                          "d = " + std::to_string(d) + ", a1+a2+a3+a4 = " +
                              std::to_string(w.anticanonical_degree()));
  }
  return FamilyRecord{number, d, w, anticanonical_cube(d, w)};
}

FamilyRecord parse_family_line(std::string_view line, const std::string& source, int line_no) {
  auto fields = split_tabs(line);
  if (fields.size() != kColumns) {
    throw ParseError(source, line_no,
                     "expected " + std::to_string(kColumns) + " tab-separated fields, got " +
                         std::to_string(fields.size()));
  }
  static constexpr const char* kNames[kColumns] = {"number", "d", "a0", "a1", "a2", "a3", "a4"};
  std::array<std::int64_t, kColumns> v{};
  for (int i = 0; i < kColumns; ++i) v[i] = parse_field(fields[i], source, line_no, kNames[i]);
  if (v[0] < 1 || v[0] > kFamilyCount) {
    throw ValidationError(0, "family number in 1..95", "line " + std::to_string(line_no));
  }
  int number = static_cast<int>(v[0]);
  Weights w({v[2], v[3], v[4], v[5], v[6]}, number);
  return make_family(number, v[1], w);
}

FamilyDb FamilyDb::load(std::istream& in, const std::string& source) {
  std::vector<FamilyRecord> records;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    FamilyRecord record = parse_family_line(line, source, line_no);
    int number = record.number;
    int expected = static_cast<int>(records.size()) + 1;
    if (number != expected) {
      throw ValidationError(number, "ascending family numbers",
                            "line " + std::to_string(line_no) + " expected family " +
                                std::to_string(expected));
    }
    records.push_back(std::move(record));
  }
  if (in.bad()) throw IoError("read failure on " + source);
  if (records.size() != kFamilyCount) {
    throw CountError(source + ": expected " + std::to_string(kFamilyCount) +
                     " family records, found " + std::to_string(records.size()));
  }
  return FamilyDb(std::move(records));
}

FamilyDb FamilyDb::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open family file: " + path.string());
  return load(in, path.string());
}

const FamilyRecord& FamilyDb::get(int number) const {
  if (number < 1 || number > static_cast<int>(records_.size())) {
    throw NotFoundError("no family numbered " + std::to_string(number));
  }
  return records_[static_cast<std::size_t>(number - 1)];
}

void FamilyDb::serialize(std::ostream& out) const {
  for (const auto& f : records_) {
    out << f.number << '\t' << f.d;
    for (auto a : f.weights.values()) out << '\t' << a;
    out << '\n';
  }
}

}  // namespace curvex
