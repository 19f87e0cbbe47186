#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boxcover/tower.hpp"

namespace boxcover {

/// Outcome of one verification suite; `details` are report lines without
/// timings, so reports are reproducible byte for byte.
struct SuiteResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, std::string line);
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
};

/// Suite names in the order `all` runs them.
const std::vector<std::string>& suite_names();
bool is_suite_name(std::string_view name);

/// Runs one named suite against a tower with explicit X_1 and X_2. Throws
/// InvalidInput for an unknown name.
SuiteResult run_suite(std::string_view name, const Tower& tower,
                      const VerifyOptions& options);

/// "[suite] line" for every detail, then "[suite] PASS|FAIL".
std::string format_suite(const SuiteResult& result);

}  // namespace boxcover
