#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "metatoeplitz/linalg.hpp"

namespace metatoeplitz {

struct VerifyOptions {
  std::uint64_t seed = 0;
  Index n = 1;  // 1 or 2
};

/// Outcome of one cross-validation suite. `worst` is the largest observed
/// error statistic and `threshold` the bound it must stay under.
struct SuiteResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;
  double threshold = 0.0;
  int cases = 0;
  int disagreements = 0;  // DisagreementError raised outside the boundary band
  int numerical_failures = 0;
  std::string detail;
};

/// involution, symplecticity, factorization, mehler, diagonal, slopes,
/// compactness, bergman, mixed_block, agreement
const std::vector<std::string>& suite_names();

/// Throws InvalidInputError for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);
std::vector<SuiteResult> run_all_suites(const VerifyOptions& options);

}  // namespace metatoeplitz
