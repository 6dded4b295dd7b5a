#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scoped {

/// Settings shared by every law suite. The same config always yields the
/// same corpora, the same checks, and the same report, on any platform.
struct SuiteConfig {
  std::uint64_t seed = 1;
  int depth = 4;    // nesting depth of generated programs
  int cases = 300;  // random programs per corpus
};

/// One counterexample, shrunk before it is recorded. program is the
/// canonical JSON of the offending tree; expected and actual are JSON
/// documents, or a plain message when evaluating that side threw.
struct LawFailure {
  std::string law;
  std::string algebras;
  std::string program;
  std::string expected;
  std::string actual;
};

struct LawReport {
  std::string suite;
  int cases = 0;
  std::vector<LawFailure> failures;
  std::int64_t millis = 0;

  bool passed() const { return failures.empty(); }
};

/// The suites runLawSuite accepts, in their canonical order: monad,
/// preservation, fusion, hybrid-fold, oracle-equivalence, naturality.
const std::vector<std::string>& lawSuiteNames();

/// Runs one suite. Throws ConfigError on an unknown suite name or settings
/// out of range; law violations are reported, never thrown.
LawReport runLawSuite(const std::string& suite, const SuiteConfig& cfg);

std::vector<LawReport> runAllSuites(const SuiteConfig& cfg);

/// {"suite":..., "cases":..., "failures":[...], "millis":...} with failure
/// entries carrying law, algebras, program, expected, actual.
std::string reportToJson(const LawReport& report, int indent = -1);

/// JSON array of reports, one per suite.
std::string reportsToJson(const std::vector<LawReport>& reports, int indent = -1);

}  // namespace scoped
