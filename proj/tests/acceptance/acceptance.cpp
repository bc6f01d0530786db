// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "metatoeplitz/bergman.hpp"
#include "metatoeplitz/error.hpp"
#include "metatoeplitz/model.hpp"
#include "metatoeplitz/oracle.hpp"
#include "metatoeplitz/random_instances.hpp"
#include "metatoeplitz/toeplitz.hpp"
#include "metatoeplitz/verify.hpp"
#include "metatoeplitz/weyl.hpp"

using namespace metatoeplitz;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}


std::vector<ModelInstance> phase_grid() {
  std::vector<ModelInstance> grid;
  for (int i = 0; i < 101; ++i) {
    const double re = -2.0 + (0.24 - -2.0) * i / 100.0;
    for (double im : {0.0, 0.5, 1.0}) {
      for (double a : {0.0, 0.05, 0.1, 0.15, 0.2}) grid.push_back(ModelInstance::scalar(cd(re, im), a));
    }
  }
  return grid;
}

Outcome phase_diagram() {
  const auto t0 = std::chrono::steady_clock::now();
  int compared = 0, mismatches = 0, inadmissible = 0, banded = 0;
  for (const ModelInstance& m : phase_grid()) {
    const ToeplitzProblem p = m.problem();
    Verdict general;
    try {
      general = classify_operator(p);
    } catch (const Error&) {
      ++mismatches;
      continue;
    }
    if (!m.admissible()) {
      ++inadmissible;
      if (general.verdict != OperatorClass::Inadmissible) ++mismatches;
      continue;
    }
    if (std::abs(general.margin) <= 1e-8) {
      ++banded;
      continue;
    }
    ++compared;
    if (general.verdict != classify_model(m).verdict) ++mismatches;
  }
  const double elapsed = seconds_since(t0);
  return {mismatches == 0 && elapsed < 60.0,
          fmt("%d compared, %d mismatches, %d inadmissible, %d in band, %.2f s (limit 60 s)", compared, mismatches,
              inadmissible, banded, elapsed)};
}

Outcome diagonal_law() {
  double worst = 0.0;
  for (cd lambda : {cd(-0.5, 0), cd(0, 1), cd(0.2, 0)}) {
    const ModelInstance m = ModelInstance::scalar(lambda, 0.0);
    const CVector ev = truncated_matrix(m.problem(), 40).eigenvalues();
    for (Index k = 0; k < 40; ++k) {
      const cd expected = std::pow(m.gamma(), static_cast<int>(k) + 1);
      worst = std::max(worst, std::abs(ev(k) - expected) / std::abs(expected));
    }
  }
  const double norm = truncated_matrix(ModelInstance::scalar(-0.5, 0.0).problem(), 40).norm();
  return {worst <= 1e-10 && std::abs(norm - 0.5) <= 1e-9,
          fmt("max relative eigenvalue error %.2e (tol 1e-10), |T| - 0.5 = %.2e (tol 1e-9)", worst, norm - 0.5)};
}

Outcome mehler() {
  InstanceGenerator gen(2026);
  double worst = 0.0;
  int sign_mismatch = 0, equivalence_fail = 0;
  for (int i = 0; i < 20; ++i) {
    const cd lambda = gen.admissible_lambda();
    const ModelInstance m = ModelInstance::scalar(lambda, 0.0);
    const WeylSymbol a = weyl_symbol(m.problem());
    const cd expected = lambda / (1.0 - lambda);
    worst = std::max(worst, std::abs(a.exponent.xbarx()(0, 0) - expected));
    const SymbolClass cls = classify_symbol(a).cls;
    const double g = std::abs(m.gamma());
    if ((g < 1.0) != (cls == SymbolClass::VanishingAtInfinity)) ++sign_mismatch;
    if ((std::abs(2.0 * lambda - 1.0) >= 1.0) != (expected.real() <= 0.0)) ++equivalence_fail;
  }
  return {worst <= 1e-12 && sign_mismatch == 0 && equivalence_fail == 0,
          fmt("20 samples: coefficient error %.2e (tol 1e-12), %d sign mismatches, %d equivalence failures", worst,
              sign_mismatch, equivalence_fail)};
}

OperatorClass growth_verdict(const ModelInstance& m) {
  const BergmanForm f = bergman_f(m.problem());
  if (coherent_growth_criterion(f, m.weight(), Strictness::Strict)) return OperatorClass::Compact;
  if (coherent_growth_criterion(f, m.weight(), Strictness::NonStrict)) return OperatorClass::BoundedNotCompact;
  return OperatorClass::Unbounded;
}

Outcome bergman_identity() {
  InstanceGenerator gen(2027);
  double psi_err = 0.0, model_err = 0.0;
  for (Index n : {1, 2}) {
    for (int i = 0; i < 10; ++i) {
      const Weight w = gen.weight(n, false);
      const BergmanForm f = bergman_f(ToeplitzProblem(w, ComplexQuadraticForm::zero(n)));
      const double scale = w.hermitian().cwiseAbs().maxCoeff();
      psi_err = std::max(psi_err, (f.fxz() - w.hermitian().transpose()).cwiseAbs().maxCoeff() / scale);
      psi_err = std::max(psi_err, f.fxx().cwiseAbs().maxCoeff() + f.fzz().cwiseAbs().maxCoeff());
      const ModelInstance m = gen.admissible_model(n);
      const BergmanForm g = bergman_f(m.problem());
      const cd gam = m.gamma();
      model_err = std::max(model_err, (g.fxz() - (gam / 4.0) * CMatrix::Identity(n, n)).cwiseAbs().maxCoeff());
      model_err = std::max(model_err, (g.fzz() - gam * gam * m.a).cwiseAbs().maxCoeff());
      model_err = std::max(model_err, g.fxx().cwiseAbs().maxCoeff());
    }
  }
  int compared = 0, mismatches = 0;
  for (const ModelInstance& m : phase_grid()) {
    if (!m.admissible()) continue;
    const Verdict closed = classify_model(m);
    if (std::abs(closed.margin) <= 1e-8) continue;
    ++compared;
    if (growth_verdict(m) != closed.verdict) ++mismatches;
  }
  return {psi_err <= 1e-14 && model_err <= 1e-12 && mismatches == 0,
          fmt("q = 0 error %.2e (tol 1e-14), model error %.2e (tol 1e-12), growth criterion %d/%d agree", psi_err,
              model_err, compared - mismatches, compared)};
}

Outcome mixed_block() {
  InstanceGenerator gen(2028);
  double smallest = INFINITY;
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    const ToeplitzProblem p = gen.admissible_problem(2, i % 2 ? InstanceMix::CompactBiased : InstanceMix::General);
    try {
      const BergmanForm f = bergman_f(p);
      smallest = std::min(smallest, std::abs(f.fxz().determinant()) / std::abs(p.weight().hermitian().determinant()));
    } catch (const Error&) {
      ++failures;
    }
  }
  return {failures == 0 && smallest > 1e-10,
          fmt("100 instances, n = 2: min |det fxz| / |det H| = %.3e (must exceed 1e-10), %d failures", smallest, failures)};
}

Outcome geometry() {
  double worst = 0.0;
  int failed = 0;
  std::string first;
  for (Index n : {1, 2}) {
    for (const char* name : {"involution", "symplecticity", "factorization"}) {
      const SuiteResult r = run_suite(name, {0, n});
      worst = std::max(worst, r.worst);
      if (!r.passed) {
        ++failed;
        if (first.empty()) first = std::string(name) + ": " + r.detail;
      }
    }
  }
  return {failed == 0 && worst <= 1e-12,
          fmt("involution / symplecticity / factorization at n = 1, 2: worst residual %.2e (tol 1e-12)%s", worst,
              first.empty() ? "" : (", " + first).c_str())};
}

Outcome coherent() {
  CVector u(1);
  u(0) = 1.0;
  const double s1 = coherent_log_norm_slope(ModelInstance::scalar(-0.5, 0.0).problem(), u, {1, 2, 4}).slope;
  const double s2 = coherent_log_norm_slope(ModelInstance::scalar(0.2, 0.0).problem(), u, {1, 2, 4}).slope;
  const double e1 = std::abs(s1 - -0.1875) / 0.1875;
  const double e2 = std::abs(s2 - 4.0 / 9.0) / (4.0 / 9.0);
  InstanceGenerator gen(2029);
  const Weight w = Weight::isotropic(1, 0.25);
  double overlap = 0.0;
  for (int i = 0; i < 20; ++i) {
    const CVector a = gen.complex_vector(1), b = gen.complex_vector(1);
    const double expected = std::exp(-(b - a).squaredNorm() / 4.0);
    overlap = std::max(overlap, std::abs(std::abs(numeric_coherent_overlap(w, a, b, 80)) - expected));
    overlap = std::max(overlap, std::abs(std::abs(coherent_overlap(w, a, b)) - expected));
  }
  return {e1 <= 0.01 && e2 <= 0.01 && overlap <= 1e-12,
          fmt("slopes %.6f (expect -0.1875) and %.6f (expect 0.4444), relative errors %.1e, %.1e (tol 1%%); "
              "overlap error %.1e (tol 1e-12)",
              s1, s2, e1, e2, overlap)};
}

Outcome compactness() {
  const double r1 = singular_decay(ModelInstance::scalar(-0.5, 0.0).problem(), 40).ratio;
  const double r2 = singular_decay(ModelInstance::scalar(cd(0, 1), 0.0).problem(), 40).ratio;
  const ToeplitzProblem zero = ModelInstance::scalar(0.0, 0.0).problem();
  const double r0 = singular_decay(zero, 40).ratio;
  const OperatorClass v = classify_operator(zero).verdict;
  const double e1 = std::abs(r1 - 0.5) / 0.5, e2 = std::abs(r2 - 1.0 / std::sqrt(5.0)) * std::sqrt(5.0);
  return {e1 <= 0.05 && e2 <= 0.05 && std::abs(r0 - 1.0) <= 0.01 && v == OperatorClass::BoundedNotCompact,
          fmt("ratios %.6f (|gamma| 0.5), %.6f (|gamma| %.6f), q = 0: %.6f, verdict %s", r1, r2, 1.0 / std::sqrt(5.0),
              r0, std::string(to_string(v)).c_str())};
}

Outcome disagreement_guard() {
  int disagreements = 0, failures = 0, suites = 0, not_passed = 0;
  for (std::uint64_t seed = 0; seed <= 9; ++seed) {
    for (Index n : {1, 2}) {
      for (const auto& name : suite_names()) {
        const SuiteResult r = run_suite(name, {seed, n});
        ++suites;
        disagreements += r.disagreements;
        failures += r.numerical_failures;
        not_passed += !r.passed;
      }
    }
  }
  return {disagreements == 0 && failures == 0,
          fmt("%d suite runs (seeds 0-9, n = 1, 2): %d disagreements, %d numerical failures, %d suites not passing",
              suites, disagreements, failures, not_passed)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"phase diagram", phase_diagram},     {"diagonal law", diagonal_law},
      {"Mehler cross-check", mehler},       {"Bergman identity", bergman_identity},
      {"non-degenerate fxz", mixed_block},       {"geometry suite", geometry},
      {"coherent-state norms", coherent},   {"compactness evidence", compactness},
      {"disagreement guard", disagreement_guard},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
