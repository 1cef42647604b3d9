#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "curvex/rational.hpp"
#include "curvex/wps.hpp"

namespace curvex {

inline constexpr int kFamilyCount = 95;

struct FamilyRecord {
  int number;
  std::int64_t d;
  Weights weights;
  Rational a_cube;

  // "X_13 in P(1,1,3,4,5)"
  std::string str() const;
};

// Validates every record invariant; throws ValidationError.
FamilyRecord make_family(int number, std::int64_t d, const Weights& w);

// One TSV data line "number<TAB>d<TAB>a0<TAB>...<TAB>a4".
FamilyRecord parse_family_line(std::string_view line, const std::string& source = "<line>",
                               int line_no = 1);

// The 95 families, immutable once loaded, indexed by family number.
class FamilyDb {
 public:
  // Parses the family TSV. `source` names the stream in error messages.
  static FamilyDb load(std::istream& in, const std::string& source = "<stream>");
  static FamilyDb load_file(const std::filesystem::path& path);

  const FamilyRecord& get(int number) const;
  const std::vector<FamilyRecord>& records() const { return records_; }

  auto begin() const { return records_.begin(); }
  auto end() const { return records_.end(); }
  std::size_t size() const { return records_.size(); }

  // Canonical TSV: data lines only, tab separated, ascending by number.
  void serialize(std::ostream& out) const;

 private:
  explicit FamilyDb(std::vector<FamilyRecord> records) : records_(std::move(records)) {}

  std::vector<FamilyRecord> records_;
};

}  // namespace curvex
