#pragma once

// Named verification suites.  Each runs a fixed, seeded battery of checks and
// round-trips every document it produced.

#include "hzalg/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hzalg {

struct SuiteOptions {
  std::size_t truncation = 3;
  std::size_t simplicial_bound = 5;
  std::uint64_t seed = 1;
  /// Only lem-D-rat reads this; it defaults to Q there.
  std::optional<Ring> ring;
};

/// Counterexample marks an expected failure of a rational statement over Z;
/// it does not fail the suite.
enum class CheckStatus { Pass, Fail, Skipped, Counterexample };
std::string status_name(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::optional<Document> reproducer;  // kept for failures only
};

struct SuiteReport {
  std::string suite;
  SuiteOptions options;
  std::vector<Check> checks;
  std::size_t documents = 0;
  double seconds = 0;

  bool passed() const;
  std::size_t count(CheckStatus s) const;
  std::string to_text() const;
  Json to_json() const;
};

/// lem-D, prop-DR, prop-DR2, prop-ma-ch, dold-kan, eilenberg-zilber,
/// prop-sab-ch, prop-hz-sab, prop-extra, lem-D-rat, prop-cof-gen.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace hzalg
