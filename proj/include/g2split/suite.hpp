#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace g2split {

struct SuiteOptions {
  std::uint64_t seed = 2;
  int samples = 100;
  int oracle_samples = 50;
  int singular_samples = 20;
  unsigned precision = 60;
  std::uint64_t prime = 10007;
  int minor_samples = 25;
};

/// Check ids in report order.
std::vector<std::string> suite_ids();

/// {id, status, method, runtime_ms, discrepancies[], details}. Throws
/// InvalidArgument listing the valid ids.
nlohmann::json run_check(const std::string& id, const SuiteOptions& options = {});

/// {checks[], overall, discrepancy_count, discrepancies[]}. overall is "fail"
/// when any check fails, else "pass" or "discrepancies(N)".
nlohmann::json run_suite(const std::vector<std::string>& ids, const SuiteOptions& options = {});

}  // namespace g2split
