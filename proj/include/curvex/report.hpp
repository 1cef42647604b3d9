#pragma once

#include <iosfwd>
#include <vector>

#include "json.hpp"

#include "curvex/audit.hpp"

// JSON and text rendering for the audit CLI. Rationals serialize as "p/q".
namespace curvex::report {

using nlohmann::json;

json families_json(const FamilyDb& db);
json lists_json(const std::vector<DerivedList>& lists);
json test_class_json(const TestClassCertificate& c);
json surface_json(const SurfaceCertificate& c);
json divisibility_json(const DivisibilityCertificate& c);
json extension_json(const ExtensionReport& r);
json certificates_json(const std::vector<TestClassCertificate>& test_class,
                       const std::vector<SurfaceCertificate>& surface,
                       const std::vector<DivisibilityCertificate>& divisibility,
                       const std::vector<ExtensionReport>& extension);
json coverage_json(const std::vector<FamilyCoverage>& coverage);
json full_json(const FamilyDb& db, const FullReport& r);

// Recomputes a serialized certificate from its inputs and checks that every
// stored intermediate value and the verdict agree.
bool revalidate_test_class(const json& j);
bool revalidate_surface(const json& j);

void print_lists(std::ostream& os, const std::vector<DerivedList>& lists);
void print_certificates(std::ostream& os, const std::vector<TestClassCertificate>& test_class,
                        const std::vector<SurfaceCertificate>& surface,
                        const std::vector<DivisibilityCertificate>& divisibility,
                        const std::vector<ExtensionReport>& extension);
void print_coverage(std::ostream& os, const std::vector<FamilyCoverage>& coverage);

}  // namespace curvex::report
