#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algebroid/parallel.hpp"
#include "algebroid/report.hpp"

namespace algebroid {

struct SuiteOptions {
  std::uint64_t seed = 0;
  int max_degree = 2;
  Exec exec = Exec::Parallel;
};

// Frozen names accepted by verify_identity.
const std::vector<std::string>& identity_names();
// Extra randomized families run by the suite: "d-squared", "delta-squared".
const std::vector<std::string>& complex_names();

// Randomized instances of one unconditional identity over its fixtures;
// throws std::invalid_argument for an unknown name.
CheckResult verify_identity(const std::string& name, const SuiteOptions& opt);
// Frozen fixture names in report order; run_fixture throws
// std::invalid_argument for an unknown name.
const std::vector<std::string>& fixture_names();
CheckResult run_fixture(const std::string& name);
// Frozen fixtures with their expected verdicts, one result each.
std::vector<CheckResult> run_fixtures(Exec exec = Exec::Parallel);
// Fixtures plus every identity and complex family.
ReportDocument run_suite(const SuiteOptions& opt);

}  // namespace algebroid
