#pragma once

// Verification reports and the configuration they are produced from.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rees/integer.hpp"

namespace rees {

struct SuiteConfig {
  std::string suite;
  /// Unset means the suite's default range.
  std::optional<int> n_max;
  std::vector<int> q_values{2, 3};
  std::vector<int> t_values{1, 2, 3};
  std::optional<int> variables;
  std::optional<int> degree_cap;
  std::uint64_t seed = 1;
  int trials = 100;
  std::optional<std::size_t> max_simplices;
  std::size_t max_subspaces = 5000;
  std::string output;
  std::string format = "table";

  /// Reads a JSON object whose keys mirror the field names. Unknown keys
  /// throw std::invalid_argument.
  static SuiteConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  /// The simplex guard in force: max_simplices if set, else the environment
  /// default.
  std::size_t simplex_limit() const;
};

enum class CaseStatus { pass, fail, skipped };

struct CaseResult {
  /// Short stable key, e.g. "n=4 j=1".
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  std::string lhs;
  std::string rhs;
  CaseStatus status = CaseStatus::fail;
  /// Mismatch details, skip reason or supporting data.
  nlohmann::json witness;
};

struct Report {
  std::string suite;
  std::string statement;
  /// Homology degree convention used by the suite, e.g. "n-1".
  std::string degree_convention;
  std::vector<CaseResult> cases;

  /// Appends a case that passes iff lhs == rhs (compared as strings).
  CaseResult& add(std::string name, nlohmann::json params, std::string lhs, std::string rhs,
                  nlohmann::json witness = nullptr);
  CaseResult& skip(std::string name, nlohmann::json params, std::string reason);

  std::size_t count(CaseStatus s) const;
  /// True iff no executed case failed.
  bool passed() const { return count(CaseStatus::fail) == 0; }

  /// {"suite","statement","degree_convention","cases":[{"name","params",
  /// "lhs","rhs","pass","skipped","witness"}],"summary":{...}}
  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
  /// Columns: suite, case, lhs, rhs, pass.
  std::string to_csv() const;
  std::string to_table() const;
  /// Dispatches on "json", "csv" or "table".
  std::string render(const std::string& format) const;
};

/// "k1=v1 k2=v2" from a flat JSON object, keys in sorted order.
std::string case_key(const nlohmann::json& params);

/// Runs one case body, turning guard overruns into a skipped case.
template <typename F>
void run_guarded(Report& r, const std::string& name, const nlohmann::json& params, F&& body);

template <typename F>
void run_guarded(Report& r, const std::string& name, const nlohmann::json& params, F&& body) {
  try {
    body();
  } catch (const GuardExceeded& e) {
    r.skip(name, params, e.what());
  }
}

}  // namespace rees
