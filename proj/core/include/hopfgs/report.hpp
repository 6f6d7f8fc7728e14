/**
 * @file report.hpp
 * @brief Run configuration and deterministic report assembly/rendering.
 *
 * Reports are deterministic: identical configurations produce byte-identical
 * output. Anything volatile (wall-clock timing, host data) belongs on stderr,
 * never in a report.
 */
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hopfgs {

inline constexpr const char* kToolName = "hopfgs";
inline constexpr const char* kToolVersion = "1.0.0";

/// Configuration shared by all CLI commands.
struct RunConfig {
  std::string command;          ///< e.g. "cohomology sl2"
  std::string q = "1";          ///< rational string, or "symbolic"
  int degree_bound = 6;         ///< PBW truncation degree D
  int max_degree = 2;           ///< top cochain degree N
  std::string selector;         ///< group name, builtin name, or input path
  std::string format = "table"; ///< "json" or "table"
  unsigned long seed = 0;       ///< seed for randomized property checks

  /**
   * Validates the configuration: q parses to a nonzero rational (unless
   * "symbolic"), degrees are nonnegative, format is known; when
   * `needs_resolution_margin` is set (four-term-complex commands), requires
   * degree_bound >= max_degree + 2. Throws ValidationError.
   */
  void validate(bool needs_resolution_margin = false) const;

  /// Deterministic JSON echo of the configuration, embedded in every report.
  nlohmann::json echo() const;
};

/// One pass/fail line of a verification suite.
struct CheckLine {
  std::string name;
  bool pass = false;
  std::string witness;  ///< empty when passing; failure details otherwise
};

/// Report for cohomology commands: dims, ranks and homology of a complex.
nlohmann::json cohomology_report(const RunConfig& cfg, const std::string& algebra,
                                 const std::string& coefficients,
                                 const std::vector<int>& cochain_dims,
                                 const std::vector<int>& ranks,
                                 const std::vector<int>& homology);

/// Report for verification suites: one line per checked property.
nlohmann::json verify_report(const RunConfig& cfg, const std::string& suite,
                             const std::vector<CheckLine>& checks);

/// True iff every check line in a verify report passes.
bool report_all_pass(const nlohmann::json& report);

/**
 * Renders a report in the requested format. "json" emits indented JSON with
 * alphabetically ordered keys; "table" emits aligned plain text. Both end
 * with a newline and are deterministic functions of the report.
 */
std::string render(const nlohmann::json& report, const std::string& format);

/// Human-readable documentation of the report JSON shapes.
std::string report_schema();

}  // namespace hopfgs
