/**
 * @file report.cpp
 * @brief Deterministic report assembly and rendering.
 */
#include "hopfgs/report.hpp"

#include <sstream>

#include "hopfgs/hopf.hpp"    // ValidationError
#include "hopfgs/scalar.hpp"  // Scalar parsing for q validation

namespace hopfgs {

void RunConfig::validate(bool needs_resolution_margin) const {
  if (q != "symbolic") {
    Scalar qs;
    try {
      qs = Scalar::parse(q);
    } catch (const std::exception& e) {
      throw ValidationError("q must be a rational number or \"symbolic\": " + std::string(e.what()));
    }
    if (qs.is_zero()) throw ValidationError("q must be nonzero");
  }
  if (degree_bound < 0) throw ValidationError("degree bound must be nonnegative");
  if (max_degree < 0) throw ValidationError("max degree must be nonnegative");
  if (needs_resolution_margin && degree_bound < max_degree + 2)
    throw ValidationError("degree bound must be at least max degree + 2 for this command");
  if (format != "json" && format != "table")
    throw ValidationError("format must be json or table");
}

nlohmann::json RunConfig::echo() const {
  nlohmann::json j;
  j["command"] = command;
  j["q"] = q;
  j["degree_bound"] = degree_bound;
  j["max_degree"] = max_degree;
  j["selector"] = selector;
  j["format"] = format;
  j["seed"] = seed;
  return j;
}

namespace {

nlohmann::json report_head(const RunConfig& cfg) {
  nlohmann::json j;
  j["version"] = std::string(kToolName) + " " + kToolVersion;
  j["config"] = cfg.echo();
  j["seed"] = cfg.seed;
  return j;
}

}  // namespace

nlohmann::json cohomology_report(const RunConfig& cfg, const std::string& algebra,
                                 const std::string& coefficients,
                                 const std::vector<int>& cochain_dims,
                                 const std::vector<int>& ranks,
                                 const std::vector<int>& homology) {
  nlohmann::json j = report_head(cfg);
  j["algebra"] = algebra;
  j["coefficients"] = coefficients;
  j["q"] = cfg.q;
  j["cochain_dims"] = cochain_dims;
  j["ranks"] = ranks;
  j["homology"] = homology;
  return j;
}

nlohmann::json verify_report(const RunConfig& cfg, const std::string& suite,
                             const std::vector<CheckLine>& checks) {
  nlohmann::json j = report_head(cfg);
  j["suite"] = suite;
  auto arr = nlohmann::json::array();
  int passed = 0;
  for (const auto& c : checks) {
    nlohmann::json line;
    line["name"] = c.name;
    line["pass"] = c.pass;
    line["witness"] = c.witness;
    arr.push_back(line);
    if (c.pass) ++passed;
  }
  j["checks"] = arr;
  j["passed"] = passed;
  j["total"] = static_cast<int>(checks.size());
  j["all_pass"] = (passed == static_cast<int>(checks.size()));
  return j;
}

bool report_all_pass(const nlohmann::json& report) {
  if (report.contains("all_pass")) return report["all_pass"].get<bool>();
  return true;
}

namespace {

std::string scalar_to_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_value(std::ostringstream& os, const std::string& key, const nlohmann::json& v,
                  const std::string& prefix) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      render_value(os, it.key(), it.value(), prefix + key + ".");
    return;
  }
  os << prefix << key << ": " << scalar_to_text(v) << "\n";
}

}  // namespace

std::string render(const nlohmann::json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format != "table") throw ValidationError("format must be json or table");

  std::ostringstream os;
  // Headline fields first, in a fixed order, then the rest alphabetically.
  const char* headline[] = {"version", "suite", "algebra", "coefficients", "q"};
  for (const char* key : headline)
    if (report.contains(key)) os << key << ": " << scalar_to_text(report[key]) << "\n";

  if (report.contains("cochain_dims")) {
    const auto& dims = report["cochain_dims"];
    const auto& ranks = report["ranks"];
    const auto& hom = report["homology"];
    os << "\n  n | dim C^n | rank d_n | dim H^n\n";
    os << "----+---------+----------+--------\n";
    for (size_t i = 0; i < dims.size(); ++i) {
      os << "  " << i << " | " << dims[i].dump() << " | "
         << (i < ranks.size() ? ranks[i].dump() : std::string("0")) << " | "
         << (i < hom.size() ? hom[i].dump() : std::string("-")) << "\n";
    }
    os << "\nhomology: " << report["homology"].dump() << "\n";
  }

  if (report.contains("checks")) {
    os << "\n";
    for (const auto& line : report["checks"]) {
      os << (line["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << line["name"].get<std::string>();
      std::string witness = line["witness"].get<std::string>();
      if (!witness.empty()) os << " — " << witness;
      os << "\n";
    }
    os << "\npassed " << report["passed"].dump() << "/" << report["total"].dump() << "\n";
  }

  // Remaining fields (skip the ones already shown and the config echo body,
  // which is summarized in one line).
  auto shown = [&](const std::string& k) {
    for (const char* h : headline)
      if (k == h) return true;
    return k == "cochain_dims" || k == "ranks" || k == "homology" || k == "checks" ||
           k == "passed" || k == "total" || k == "config";
  };
  os << "\n";
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (shown(it.key())) continue;
    render_value(os, it.key(), it.value(), "");
  }
  if (report.contains("config")) {
    const auto& cfg = report["config"];
    os << "config: command=" << scalar_to_text(cfg["command"]) << " q=" << scalar_to_text(cfg["q"])
       << " degree_bound=" << cfg["degree_bound"].dump() << " max_degree=" << cfg["max_degree"].dump()
       << " selector=" << scalar_to_text(cfg["selector"]) << " seed=" << cfg["seed"].dump() << "\n";
  }
  return os.str();
}

std::string report_schema() {
  std::ostringstream os;
  os << "Report shapes (" << kToolName << " " << kToolVersion << ")\n"
     << "\n"
     << "Common fields (every report):\n"
     << "  version   string  tool name and version\n"
     << "  config    object  echo of the run configuration:\n"
     << "                    {command, q, degree_bound, max_degree, selector, format, seed}\n"
     << "  seed      integer seed used for randomized property checks\n"
     << "\n"
     << "cohomology reports add:\n"
     << "  algebra       string   algebra the complex was built over\n"
     << "  coefficients  string   coefficient module description\n"
     << "  q             string   exact rational q, or \"symbolic\"\n"
     << "  cochain_dims  [int]    dim C^n for n = 0..N\n"
     << "  ranks         [int]    rank of the differential d_n : C^n -> C^(n+1)\n"
     << "  homology      [int]    dim H^n for n = 0..N\n"
     << "\n"
     << "verify reports add:\n"
     << "  suite     string   suite name\n"
     << "  checks    [object] one per property: {name, pass, witness}\n"
     << "  passed    integer  number of passing checks\n"
     << "  total     integer  number of checks\n"
     << "  all_pass  bool     passed == total\n"
     << "\n"
     << "normalizability reports add:\n"
     << "  normalizable  bool\n"
     << "  reason        string  explanation when not normalizable\n"
     << "  witness_index integer basis index witnessing failure (-1 if none)\n"
     << "  phi1          string  phi(1), exact\n"
     << "  lambda        string  proportionality factor phi~ = lambda phi, exact\n"
     << "  mu_squared    string  lambda * phi(1), exact\n"
     << "  mu            string  square root of mu_squared when rational (else absent)\n"
     << "  q             string  root of q + 1/q = mu when rational (else absent)\n"
     << "\n"
     << "All scalars are exact and printed as strings; reports contain no\n"
     << "volatile fields, so identical configurations render byte-identically.\n"
     << "Timing is printed to stderr only.\n";
  return os.str();
}

}  // namespace hopfgs
