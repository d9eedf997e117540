#pragma once

// The catalog of verification suites and the dispatcher that runs them.
// Every suite computes the two sides of an identity by separate routes
// (enumeration against homology or Möbius functions, or two independent
// formal computations) and records one case per parameter point.

#include <string>
#include <vector>

#include "rees/report.hpp"

namespace rees {

struct SuiteInfo {
  std::string id;
  /// The identity the suite checks, in plain notation.
  std::string statement;
  std::string degree_convention;
};

/// Every suite in a fixed order.
std::vector<SuiteInfo> list_suites();
bool is_suite(const std::string& id);

/// Runs config.suite. Throws std::invalid_argument for an unknown suite id.
/// Cases whose complex or lattice exceeds a guard are reported as skipped.
Report run_suite(const SuiteConfig& config);

}  // namespace rees
