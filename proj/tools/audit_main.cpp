// audit: re-derives the low-degree curve lemmas, certificates and the
// per-family coverage ledger for the 95 Fano hypersurface families.
//
// Exit codes: 0 all checks pass, 1 certificate or list failure, 2 input error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "curvex/audit.hpp"
#include "curvex/errors.hpp"
#include "curvex/report.hpp"

namespace fs = std::filesystem;
using namespace curvex;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Options {
  std::string families;
  std::string table;
  std::string format = "text";
};

std::string default_path(const char* file) {
  const char* dir = std::getenv("AUDIT_DATA_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return (fs::path(dir) / file).string();
}

std::string require_path(const std::string& given, const char* file, const char* flag) {
  if (!given.empty()) return given;
  std::string fallback = default_path(file);
  if (fallback.empty()) {
    throw InputError(std::string("missing ") + flag + " (or set AUDIT_DATA_DIR)");
  }
  return fallback;
}

void emit(const report::json& j) { std::cout << j.dump(2) << '\n'; }

int run_validate(const Options& o) {
  auto path = require_path(o.families, "families.tsv", "--families");
  auto db = FamilyDb::load_file(path);
  std::cout << "ok: " << db.size() << " families in " << path << " satisfy all invariants\n";
  return kOk;
}

int run_lists(const Options& o) {
  auto db = FamilyDb::load_file(require_path(o.families, "families.tsv", "--families"));
  auto lists = derive_lists(db);
  bool ok = true;
  for (const auto& l : lists) ok = ok && l.matches();
  if (o.format == "json") {
    emit({{"lists", report::lists_json(lists)}});
  } else {
    report::print_lists(std::cout, lists);
  }
  if (!ok) std::cerr << "error: derived lists differ from the expected lists\n";
  return ok ? kOk : kCheckFailed;
}

int run_certify(const Options& o) {
  auto db = FamilyDb::load_file(require_path(o.families, "families.tsv", "--families"));
  auto rows = load_surface_rows_file(require_path(o.table, "table1.tsv", "--table"));
  auto test_class = certify_test_class_list(db);
  auto surface = verify_surface_rows(db, rows);
  auto divisibility = divisibility_certificates(db);
  auto extension = extension_checks(db);

  if (o.format == "json") {
    emit({{"certificates", report::certificates_json(test_class, surface, divisibility, extension)}});
  } else {
    report::print_certificates(std::cout, test_class, surface, divisibility, extension);
  }
  bool ok = true;
  for (const auto& c : test_class) {
    if (c.validity() != Validity::Valid) {
      ok = false;
      std::cerr << "certificate failure: family " << c.family << " test class value "
                << c.value << '\n';
    }
  }
  for (const auto& c : surface) {
    if (!c.valid()) {
      ok = false;
      std::cerr << "certificate failure: " << c.describe() << '\n';
    }
  }
  return ok ? kOk : kCheckFailed;
}

int run_full(const Options& o) {
  auto db = FamilyDb::load_file(require_path(o.families, "families.tsv", "--families"));
  auto rows = load_surface_rows_file(require_path(o.table, "table1.tsv", "--table"));
  auto r = build_full_report(db, std::move(rows));

  if (o.format == "json") {
    emit(report::full_json(db, r));
  } else {
    std::cout << "== lists\n";
    report::print_lists(std::cout, r.lists);
    std::cout << "== certificates\n";
    report::print_certificates(std::cout, r.test_class, r.surface, r.divisibility, r.extension);
    std::cout << "== coverage\n";
    report::print_coverage(std::cout, r.coverage);
  }
  bool ok = r.lists_match() && r.certificates_valid() && r.gaps() == 0;
  if (!ok) {
    std::cerr << "error: lists match = " << r.lists_match()
              << ", certificates valid = " << r.certificates_valid() << ", gaps = " << r.gaps()
              << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curve exclusion audit for the 95 Fano 3-fold hypersurface families"};
  app.require_subcommand(1);

  Options opts;
  auto add_families = [&](CLI::App* sub) {
    sub->add_option("--families", opts.families, "family TSV (default $AUDIT_DATA_DIR/families.tsv)");
  };
  auto add_table = [&](CLI::App* sub) {
    sub->add_option("--table", opts.table, "surface-row TSV (default $AUDIT_DATA_DIR/table1.tsv)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "load the family file and check every invariant");
  add_families(validate);
  auto* lists = app.add_subcommand("lists", "derive the lemma exception lists");
  add_families(lists);
  add_format(lists);
  auto* certify = app.add_subcommand("certify", "build and check every exclusion certificate");
  add_families(certify);
  add_table(certify);
  add_format(certify);
  auto* full = app.add_subcommand("full", "lists, certificates and the per-family coverage audit");
  add_families(full);
  add_table(full);
  add_format(full);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return run_validate(opts);
    if (*lists) return run_lists(opts);
    if (*certify) return run_certify(opts);
    return run_full(opts);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
}
