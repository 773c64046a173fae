#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "howe/algebra.hpp"

namespace howe {

struct SuiteResult {
  std::string suite;
  int cases = 0;
  double maxError = 0.0;
  bool pass = false;
  std::optional<cplx> constant;
  std::vector<std::pair<std::string, std::string>> notes;
};

struct VerifyOptions {
  std::string suite = "all";
  int cases = 0;  // 0: per-suite default
  std::uint64_t seed = 1;
  std::optional<int> k;  // restricts the hecht and orbit suites to one weight
};

std::vector<std::string> suite_names();

// Throws PreconditionError for an unknown suite name.
std::vector<SuiteResult> run_verify(const VerifyOptions& opts);

}  // namespace howe
