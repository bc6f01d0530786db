#include "metatoeplitz_cli/commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "metatoeplitz/bergman.hpp"
#include "metatoeplitz/error.hpp"
#include "metatoeplitz/io.hpp"
#include "metatoeplitz/model.hpp"
#include "metatoeplitz/oracle.hpp"
#include "metatoeplitz/toeplitz.hpp"
#include "metatoeplitz/verify.hpp"
#include "metatoeplitz/weyl.hpp"

namespace metatoeplitz::cli {

using json = nlohmann::ordered_json;

namespace {

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json complex_json(cd z) { return json::array({z.real(), z.imag()}); }

ScanRow scan_point(double re, double im, double norm_a) {
  ScanRow row{re, im, norm_a, "", 0.0};
  const ModelInstance m = ModelInstance::scalar(cd(re, im), cd(norm_a, 0.0));
  const ToeplitzProblem p = m.problem();
  try {
    const Verdict v = classify_operator(p);
    row.verdict = std::string(to_string(v.verdict));
    row.margin = v.margin;
  } catch (const Error&) {
    row.verdict = "error";
    row.margin = std::nan("");
  }
  return row;
}

}  // namespace

int run_classify(const ClassifyOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const ToeplitzProblem problem = read_problem_file(options.path);
    const Report report = make_report(problem, options.timing);
    out << report_to_json(report);
    if (!problem.admissible()) {
      err << "inadmissible: " << problem.admissibility().message << "\n";
      return kInadmissible;
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInadmissible;
  } catch (const DisagreementError& e) {
    err << "disagreement: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

std::vector<ScanRow> scan_rows(const ScanOptions& options) {
  const std::size_t nre = options.lambda_re.size(), nim = options.lambda_im.size(), na = options.norm_a.size();
  const std::size_t total = nre * nim * na;
  std::vector<ScanRow> rows(total);
  auto point = [&](std::size_t k) {
    const std::size_t ia = k % na, iim = (k / na) % nim, ire = k / (na * nim);
    rows[k] = scan_point(options.lambda_re[ire], options.lambda_im[iim], options.norm_a[ia]);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  if (jobs == 1) {
    for (std::size_t k = 0; k < total; ++k) point(k);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < total; k = next++) point(k);
    });
  }
  for (auto& t : pool) t.join();
  return rows;
}

std::string format_scan_csv(const std::vector<ScanRow>& rows) {
  std::string csv = "re_lambda,im_lambda,normA,verdict,margin\n";
  for (const auto& r : rows) {
    csv += g17(r.re_lambda) + "," + g17(r.im_lambda) + "," + g17(r.norm_a) + "," + r.verdict + "," + g17(r.margin) + "\n";
  }
  return csv;
}

int run_scan(const ScanOptions& options, const std::string& path, std::ostream& out, std::ostream& err) {
  if (options.lambda_re.empty() || options.lambda_im.empty() || options.norm_a.empty()) {
    err << "scan: empty grid\n";
    return kInadmissible;
  }
  for (double a : options.norm_a) {
    if (a < 0.0) {
      err << "scan: --norm-a values must be nonnegative\n";
      return kInadmissible;
    }
  }
  const auto rows = scan_rows(options);
  const std::string csv = format_scan_csv(rows);
  if (path == "-") {
    out << csv;
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      err << "scan: cannot write " << path << "\n";
      return kNumericalFailure;
    }
    file << csv;
  }
  std::size_t failures = 0;
  for (const auto& r : rows) failures += r.verdict == "error";
  if (failures > 0) {
    err << "scan: " << failures << " grid points failed\n";
    return kNumericalFailure;
  }
  return kOk;
}

int run_verify(const VerifyCliOptions& options, std::ostream& out, std::ostream& err) {
  VerifyOptions vo;
  vo.seed = options.seed;
  vo.n = options.n;
  std::vector<std::string> names;
  if (options.suite) {
    names.push_back(*options.suite);
  } else {
    names = suite_names();
  }
  std::string first_failure;
  for (const auto& name : names) {
    SuiteResult r;
    try {
      r = run_suite(name, vo);
    } catch (const InvalidInputError& e) {
      err << "verify: " << e.what() << "\n";
      return kVerifyFailed;
    }
    char line[256];
    std::snprintf(line, sizeof line, "%-14s %s  worst=%.3e  threshold=%.1e  cases=%d", r.name.c_str(),
                  r.passed ? "pass" : "FAIL", r.worst, r.threshold, r.cases);
    out << line;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << "\n";
    if (!r.passed && first_failure.empty()) first_failure = r.name;
  }
  if (!first_failure.empty()) {
    err << "verify failed: suite " << first_failure << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

int run_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const ToeplitzProblem original = read_problem_file(options.path);
    if (!original.admissible()) {
      err << "inadmissible: " << original.admissibility().message << "\n";
      return kInadmissible;
    }
    // The pluriharmonic part is removed by a unitary change of weight, which
    // leaves norms, singular values and the Weyl symbol unchanged.
    const ToeplitzProblem problem = original.hermitian_reduction();
    const Index n = problem.dim();
    json j{{"experiment", options.experiment}, {"hermitian_reduction", original.weight().has_pluriharmonic_part()}};
    if (options.experiment == "trend") {
      std::vector<int> sizes = options.sizes;
      if (sizes.empty()) sizes = n == 1 ? std::vector<int>{10, 20, 30, 40} : std::vector<int>{4, 8, 12};
      const NormTrend t = norm_trend(problem, sizes);
      j["degree_bounds"] = t.degree_bounds;
      j["norms"] = t.norms;
      j["last_relative_increase"] = t.last_relative_increase;
      j["hint"] = t.hint == BoundednessHint::Plateau ? "plateau" : "growing";
    } else if (options.experiment == "decay") {
      const int bound = options.sizes.empty() ? (n == 1 ? 40 : 12) : options.sizes.back();
      const SingularDecay d = singular_decay(problem, bound);
      j["degree_bound"] = bound;
      j["ratio"] = d.ratio;
      j["levels_used"] = d.levels_used;
      std::vector<double> sv(d.singular_values.data(), d.singular_values.data() + std::min<Index>(10, d.singular_values.size()));
      j["leading_singular_values"] = sv;
    } else if (options.experiment == "weyl") {
      const WeylSymbol closed = weyl_symbol(problem);
      json points = json::array();
      for (double t : {0.0, 0.5, 1.0, 2.0}) {
        CVector x = CVector::Zero(n);
        x(0) = cd(t, 0.5 * t);
        if (n > 1) x(1) = cd(0.25 * t, 0.5 * t);
        const cd numeric = numeric_weyl(problem, x);
        const cd exact = closed(x);
        points.push_back({{"x_first", complex_json(x(0))},
                          {"numeric", complex_json(numeric)},
                          {"closed_form", complex_json(exact)},
                          {"relative_error", std::abs(numeric - exact) / std::abs(exact)}});
      }
      j["points"] = points;
    } else if (options.experiment == "coherent") {
      const int bound = options.sizes.empty() ? 0 : options.sizes.back();
      const ToeplitzProblem& reduced = problem;
      CVector dir = CVector::Zero(n);
      dir(0) = 1.0;
      dir /= std::sqrt(4.0 * reduced.weight()(dir));
      const CoherentSlope s = coherent_log_norm_slope(reduced, dir, {1.0, 2.0, 4.0}, bound);
      j["radii"] = s.radii;
      j["log_norms"] = s.log_norms;
      j["slope"] = s.slope;
      try {
        j["predicted_slope"] = 0.5 * growth_exponent(bergman_f(reduced), reduced.weight(), dir);
      } catch (const SingularSystemError&) {
      }
    } else {
      err << "oracle: unknown experiment '" << options.experiment << "'\n";
      return kInadmissible;
    }
    out << j.dump(2) << "\n";
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInadmissible;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

}  // namespace metatoeplitz::cli
