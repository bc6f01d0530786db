#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "metatoeplitz/problem.hpp"

namespace metatoeplitz {

/// Problem files are JSON:
///
///   {
///     "n": 1,
///     "Phi0": {"hermitian": [[[0.25, 0]]], "pluriharmonic": [[[0, 0]]]},
///     "q": {"xx": ..., "xbarx": ..., "xbarxbar": ...},
///     "tolerances": {"classification": 1e-9, "boundary": 1e-8}
///   }
///
/// Matrices are row-major arrays of rows; every complex entry is an [re, im]
/// pair. Phi0 = x^* H x + Re(x . P x) and
/// q = 1/2 x.Qxx x + xbar.Qxbarx x + 1/2 xbar.Qxbarxbar xbar.
/// Everything except n and Phi0.hermitian is optional. File tolerances win
/// over TOEPLITZ_TOL, which wins over the built-in defaults.
/// Errors are ParseError with the offending field in the message.
ToeplitzProblem parse_problem(const std::string& text);
ToeplitzProblem read_problem_file(const std::string& path);
std::string problem_to_json(const ToeplitzProblem& problem);

struct MethodReport {
  std::string method;
  std::string verdict;
  double margin = 0.0;
  double scale = 1.0;
  bool decisive = false;
  std::string note;
};

/// Quadratic form blocks in the (xx, xbarx, xbarxbar) convention above.
using FormBlocks = std::array<CMatrix, 3>;

struct Report {
  std::string verdict;
  double margin = 0.0;
  double scale = 1.0;
  bool boundary = false;
  std::string admissibility;
  std::vector<MethodReport> methods;
  CMatrix kappa;  // empty when inadmissible
  std::optional<cd> weyl_log_prefactor;
  std::optional<FormBlocks> weyl_exponent;
  /// f(x, z) = 1/2 x.fxx x + x.fxz z + 1/2 z.fzz z
  std::optional<FormBlocks> bergman_f;
  std::optional<double> timing_seconds;
};

bool operator==(const MethodReport& a, const MethodReport& b);
bool operator==(const Report& a, const Report& b);

/// Runs the classification pipeline. Weyl and Bergman data are computed on
/// the Hermitian reduction and left out when the corresponding system is
/// singular. Propagates DisagreementError.
Report make_report(const ToeplitzProblem& problem, bool with_timing = false);

/// Pretty-printed JSON. Non-finite reals are written as the strings "inf",
/// "-inf" and "nan"; finite reals use shortest round-trip formatting.
std::string report_to_json(const Report& report);
Report report_from_json(const std::string& text);

}  // namespace metatoeplitz
