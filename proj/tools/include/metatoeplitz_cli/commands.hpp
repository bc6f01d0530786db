#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace metatoeplitz::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInadmissible = 2, kNumericalFailure = 3 };

struct ClassifyOptions {
  std::string path;
  bool timing = false;
};

/// Writes the JSON report to `out`, diagnostics to `err`.
int run_classify(const ClassifyOptions& options, std::ostream& out, std::ostream& err);

struct ScanOptions {
  std::vector<double> lambda_re;
  std::vector<double> lambda_im;
  std::vector<double> norm_a;
  unsigned jobs = 1;
};

struct ScanRow {
  double re_lambda = 0.0;
  double im_lambda = 0.0;
  double norm_a = 0.0;
  std::string verdict;
  double margin = 0.0;
};

/// Rows in grid order (Re lambda outermost, |A| innermost). Points where the
/// pipeline reports a disagreement get the verdict "error".
std::vector<ScanRow> scan_rows(const ScanOptions& options);
std::string format_scan_csv(const std::vector<ScanRow>& rows);
/// Writes the CSV to `path` (or `out` when path is "-").
int run_scan(const ScanOptions& options, const std::string& path, std::ostream& out, std::ostream& err);

struct VerifyCliOptions {
  std::optional<std::string> suite;
  std::uint64_t seed = 0;
  int n = 1;
};

int run_verify(const VerifyCliOptions& options, std::ostream& out, std::ostream& err);

struct OracleOptions {
  std::string path;
  std::string experiment;  // trend, decay, weyl, coherent
  std::vector<int> sizes;  // degree bounds; empty selects defaults
};

int run_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err);

}  // namespace metatoeplitz::cli
