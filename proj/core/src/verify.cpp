#include "metatoeplitz/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "metatoeplitz/bergman.hpp"
#include "metatoeplitz/error.hpp"
#include "metatoeplitz/model.hpp"
#include "metatoeplitz/oracle.hpp"
#include "metatoeplitz/random_instances.hpp"
#include "metatoeplitz/symplectic.hpp"
#include "metatoeplitz/toeplitz.hpp"
#include "metatoeplitz/weyl.hpp"

namespace metatoeplitz {

namespace {

// Suites mix the seed with a per-suite salt so they draw independent streams.
std::uint64_t stream(std::uint64_t seed, std::uint64_t salt) { return seed * 0x9E3779B97F4A7C15ULL + salt; }

double relative_symplectic_residual(const LinearCanonicalMap& k) {
  const double norm = k.matrix().cwiseAbs().maxCoeff();
  return k.symplectic_residual() / std::max(1.0, norm * norm);
}

struct Tracker {
  SuiteResult r;
  Tracker(std::string name, double threshold) {
    r.name = std::move(name);
    r.threshold = threshold;
  }
  void observe(double err) {
    ++r.cases;
    if (!(err <= r.worst)) r.worst = std::isnan(err) ? INFINITY : std::max(r.worst, err);
  }
  void fail(const std::string& why) {
    if (r.detail.empty()) r.detail = why;
  }
  SuiteResult finish() {
    r.passed = r.worst <= r.threshold && r.disagreements == 0 && r.numerical_failures == 0 && r.detail.empty();
    return r;
  }
};

SuiteResult involution_suite(const VerifyOptions& o) {
  Tracker t("involution", 1e-12);
  InstanceGenerator gen(stream(o.seed, 1));
  for (int i = 0; i < 20; ++i) {
    const Weight w = gen.weight(o.n, i % 2 == 1);
    const AntilinearInvolution iota = involution_for_weight(w);
    const double scale = std::max(1.0, iota.matrix().cwiseAbs().maxCoeff());
    t.observe(iota.involution_residual() / (scale * scale));
    const AntilinearInvolution direct = involution_from_lagrangian(w);
    t.observe((iota.matrix() - direct.matrix()).cwiseAbs().maxCoeff() / scale);
    for (int k = 0; k < 5; ++k) {
      // Fixed points on Lambda.
      const PhasePoint rho = lambda_point(w, gen.complex_vector(o.n));
      const PhasePoint image = iota(rho);
      t.observe((image.stacked() - rho.stacked()).norm() / std::max(1.0, rho.stacked().norm()));
      // (1/i) sigma(rho, iota rho) is real on all of C^2n.
      const PhasePoint any{gen.complex_vector(o.n), gen.complex_vector(o.n)};
      const cd s = symplectic_product(any, iota(any)) / kI;
      t.observe(std::abs(s.imag()) / std::max(1.0, scale * any.stacked().squaredNorm()));
    }
  }
  return t.finish();
}

SuiteResult symplecticity_suite(const VerifyOptions& o) {
  Tracker t("symplecticity", 1e-12);
  InstanceGenerator gen(stream(o.seed, 2));
  for (int i = 0; i < 20; ++i) {
    const ToeplitzProblem p =
        gen.admissible_problem(o.n, i % 2 ? InstanceMix::CompactBiased : InstanceMix::General, i % 3 == 0);
    const Factorization f = reduce_and_factor(p);
    t.observe(relative_symplectic_residual(f.kappa));
    t.observe(relative_symplectic_residual(f.kappa_herm));
    t.observe(relative_symplectic_residual(f.kappa_a));
    t.observe(relative_symplectic_residual(f.kappa.inverse()));
    try {
      const ToeplitzProblem reduced = p.hermitian_reduction();
      const BergmanForm form = bergman_f(reduced);
      t.observe(relative_symplectic_residual(bergman_kappa(form, reduced.weight())));
    } catch (const SingularSystemError&) {
    }
    const ModelInstance m = gen.admissible_model(o.n);
    t.observe(relative_symplectic_residual(model_kappa(m)));
    const LinearCanonicalMap general = toeplitz_kappa(m.problem());
    const double scale = std::max(1.0, general.matrix().cwiseAbs().maxCoeff());
    t.observe((general.matrix() - model_kappa(m).matrix()).cwiseAbs().maxCoeff() / scale);
  }
  return t.finish();
}

SuiteResult factorization_suite(const VerifyOptions& o) {
  Tracker t("factorization", 1e-12);
  InstanceGenerator gen(stream(o.seed, 3));
  for (int i = 0; i < 50; ++i) {
    const ToeplitzProblem p =
        gen.admissible_problem(o.n, i % 2 ? InstanceMix::CompactBiased : InstanceMix::General, true);
    t.observe(reduce_and_factor(p).residual);
  }
  return t.finish();
}

SuiteResult mehler_suite(const VerifyOptions& o) {
  Tracker t("mehler", 1e-12);
  InstanceGenerator gen(stream(o.seed, 4));
  for (int i = 0; i < 20; ++i) {
    const cd lambda = gen.admissible_lambda();
    const ModelInstance m(lambda, CMatrix::Zero(o.n, o.n));
    const ToeplitzProblem p = m.problem();
    const WeylSymbol a = weyl_symbol(p);
    const cd expected = lambda / (1.0 - lambda);
    const CMatrix target = expected * CMatrix::Identity(o.n, o.n);
    t.observe((a.exponent.xbarx() - target).cwiseAbs().maxCoeff() / std::max(1.0, std::abs(expected)));
    t.observe(a.exponent.xx().cwiseAbs().maxCoeff() + a.exponent.xbarxbar().cwiseAbs().maxCoeff());

    const double g = std::abs(m.gamma());
    if (std::abs(g - 1.0) > 1e-8) {
      const SymbolClass cls = classify_symbol(a, p.tolerances().classification).cls;
      const SymbolClass want = g < 1.0 ? SymbolClass::VanishingAtInfinity : SymbolClass::Unbounded;
      if (cls != want) t.fail("symbol class disagrees with |gamma| at lambda = " + std::to_string(lambda.real()));
    }
    const bool outside = std::abs(2.0 * lambda - 1.0) >= 1.0;
    const bool nonpositive = expected.real() <= 0.0;
    if (outside != nonpositive) t.fail("|2 lambda - 1| >= 1 and Re lambda/(1 - lambda) <= 0 disagree");
  }
  return t.finish();
}

SuiteResult diagonal_suite(const VerifyOptions& o) {
  Tracker t("diagonal", 1e-10);
  const int bound = o.n == 1 ? 40 : 10;
  for (cd lambda : {cd(-0.5, 0.0), cd(0.0, 1.0), cd(0.2, 0.0)}) {
    const ModelInstance m(lambda, CMatrix::Zero(o.n, o.n));
    const TruncatedOperator op = truncated_matrix(m.problem(), bound);
    const CVector ev = op.eigenvalues();
    for (Index k = 0; k < op.size(); ++k) {
      int degree = 0;
      for (int a : op.basis[static_cast<std::size_t>(k)]) degree += a;
      // Tensor product of n one-dimensional operators.
      const cd expected = std::pow(m.gamma(), degree + static_cast<int>(o.n));
      t.observe(std::abs(ev(k) - expected) / std::abs(expected));
    }
    if (lambda == cd(-0.5, 0.0)) t.observe(std::abs(op.norm() - std::pow(0.5, o.n)) * 0.1);  // 1e-9 absolute
  }
  return t.finish();
}

SuiteResult slopes_suite(const VerifyOptions& o) {
  // Relative error of the fitted log-norm slope.
  Tracker t("slopes", 1e-2);
  const std::vector<double> radii = o.n == 1 ? std::vector<double>{1, 2, 4} : std::vector<double>{0.5, 1, 1.5};
  CVector u = CVector::Zero(o.n);
  u(0) = 1.0;
  for (cd lambda : {cd(-0.5, 0.0), cd(0.2, 0.0)}) {
    const ModelInstance m(lambda, CMatrix::Zero(o.n, o.n));
    const ToeplitzProblem p = m.problem();
    const double expected = (std::norm(m.gamma()) - 1.0) / 4.0;
    const CoherentSlope s = coherent_log_norm_slope(p, u, radii);
    t.observe(std::abs(s.slope - expected) / std::abs(expected));
    const double predicted = 0.5 * growth_exponent(bergman_f(p), p.weight(), u);
    t.observe(std::abs(predicted - expected) / std::abs(expected));
  }
  // A random compact instance against the Bergman growth exponent.
  InstanceGenerator gen(stream(o.seed, 6));
  const ToeplitzProblem p = gen.admissible_problem(o.n, InstanceMix::CompactBiased);
  // Scaled so that Phi0(dir) = 1/4, which keeps the coherent states inside the truncation.
  CVector dir = gen.complex_vector(o.n);
  dir /= std::sqrt(4.0 * p.weight()(dir));
  const CoherentSlope s = coherent_log_norm_slope(p, dir, radii);
  const double predicted = 0.5 * growth_exponent(bergman_f(p), p.weight(), dir);
  t.observe(std::abs(s.slope - predicted) / std::max(std::abs(predicted), 1e-3));
  // Overlap law on the model weight.
  const Weight w = Weight::isotropic(o.n, 0.25);
  for (int i = 0; i < 10; ++i) {
    const CVector a = 0.7 * gen.complex_vector(o.n), b = 0.7 * gen.complex_vector(o.n);
    const double expected = std::exp(-(b - a).squaredNorm() / 4.0);
    const double numeric = std::abs(numeric_coherent_overlap(w, a, b, o.n == 1 ? 80 : 60));
    const double closed = std::abs(coherent_overlap(w, a, b));
    t.observe(std::abs(numeric - expected) * 1e10);  // 1e-12 absolute
    t.observe(std::abs(closed - expected) * 1e10);
  }
  return t.finish();
}

SuiteResult compactness_suite(const VerifyOptions& o) {
  Tracker t("compactness", 5e-2);
  const int bound = o.n == 1 ? 40 : 12;
  for (cd lambda : {cd(-0.5, 0.0), cd(0.0, 1.0)}) {
    const ModelInstance m(lambda, CMatrix::Zero(o.n, o.n));
    const SingularDecay d = singular_decay(m.problem(), bound);
    t.observe(std::abs(d.ratio - std::abs(m.gamma())) / std::abs(m.gamma()));
  }
  const ModelInstance identity(0.0, CMatrix::Zero(o.n, o.n));
  const ToeplitzProblem p = identity.problem();
  t.observe(std::abs(singular_decay(p, bound).ratio - 1.0) * 5.0);  // 1% band
  if (classify_operator(p).verdict != OperatorClass::BoundedNotCompact) t.fail("q = 0 is not bounded_not_compact");
  return t.finish();
}

SuiteResult bergman_suite(const VerifyOptions& o) {
  Tracker t("bergman", 1e-12);
  InstanceGenerator gen(stream(o.seed, 8));
  // q = 0 gives Psi0: fxz = H^T, fxx = fzz = 0.
  for (int i = 0; i < 10; ++i) {
    const Weight w = gen.weight(o.n, false);
    const BergmanForm f = bergman_f(ToeplitzProblem(w, ComplexQuadraticForm::zero(o.n)));
    const double scale = w.hermitian().cwiseAbs().maxCoeff();
    t.observe(((f.fxz() - w.hermitian().transpose()).cwiseAbs().maxCoeff() + f.fxx().cwiseAbs().maxCoeff() +
               f.fzz().cwiseAbs().maxCoeff()) /
              scale * 1e-2);  // 1e-14 relative
  }
  for (int i = 0; i < 20; ++i) {
    const ModelInstance m = gen.admissible_model(o.n);
    const ToeplitzProblem p = m.problem();
    const BergmanForm f = bergman_f(p);
    const cd g = m.gamma();
    const double err = (f.fxz() - (g / 4.0) * CMatrix::Identity(o.n, o.n)).cwiseAbs().maxCoeff() +
                       (f.fzz() - g * g * m.a).cwiseAbs().maxCoeff() + f.fxx().cwiseAbs().maxCoeff();
    t.observe(err / std::max(1.0, std::norm(g)));
    t.observe((bergman_fxz_via_schur(p) - f.fxz()).cwiseAbs().maxCoeff() / std::max(1.0, std::abs(g)));
    // Growth criterion against the closed form, away from the boundary.
    const Verdict closed = classify_model(m);
    if (!closed.boundary) {
      const bool bounded = coherent_growth_criterion(f, p.weight(), Strictness::NonStrict);
      if (bounded != (closed.verdict != OperatorClass::Unbounded)) t.fail("growth criterion disagrees with model");
    }
    const double scale = std::max(1.0, model_kappa(m).matrix().cwiseAbs().maxCoeff());
    t.observe((bergman_kappa(f, p.weight()).matrix() - model_kappa(m).matrix()).cwiseAbs().maxCoeff() / scale);
  }
  return t.finish();
}

SuiteResult mixed_block_suite(const VerifyOptions& o) {
  // Reported statistic: 1e-10 / min scaled |det fxz|, so passing means > 1e-10.
  Tracker t("mixed_block", 1.0);
  InstanceGenerator gen(stream(o.seed, 9));
  double smallest = INFINITY;
  for (int i = 0; i < 100; ++i) {
    const ToeplitzProblem p = gen.admissible_problem(o.n, i % 2 ? InstanceMix::CompactBiased : InstanceMix::General);
    try {
      const BergmanForm f = bergman_f(p);
      const double scaled = std::abs(f.fxz().determinant()) / std::abs(p.weight().hermitian().determinant());
      smallest = std::min(smallest, scaled);
      t.observe(1e-10 / scaled);
    } catch (const SingularSystemError& e) {
      ++t.r.numerical_failures;
      t.fail(e.what());
    }
  }
  std::ostringstream os;
  os << "min |det fxz| / |det H| = " << smallest;
  if (t.r.detail.empty()) t.r.detail = os.str();
  SuiteResult r = t.finish();
  r.passed = r.worst <= 1.0 && r.numerical_failures == 0;
  return r;
}

SuiteResult agreement_suite(const VerifyOptions& o) {
  Tracker t("agreement", 0.0);
  InstanceGenerator gen(stream(o.seed, 10));
  auto check = [&](const ToeplitzProblem& p) {
    ++t.r.cases;
    try {
      (void)classify_operator(p);
    } catch (const DisagreementError& e) {
      ++t.r.disagreements;
      t.fail(e.what());
    } catch (const Error& e) {
      ++t.r.numerical_failures;
      t.fail(e.what());
    }
  };
  for (int i = 0; i < 40; ++i) {
    check(gen.admissible_problem(o.n, InstanceMix::General, i % 2 == 1));
    check(gen.admissible_problem(o.n, InstanceMix::CompactBiased, i % 2 == 1));
    check(gen.admissible_model(o.n).problem());
  }
  return t.finish();
}

using SuiteFn = std::function<SuiteResult(const VerifyOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"involution", involution_suite}, {"symplecticity", symplecticity_suite},
      {"factorization", factorization_suite}, {"mehler", mehler_suite},
      {"diagonal", diagonal_suite},     {"slopes", slopes_suite},
      {"compactness", compactness_suite}, {"bergman", bergman_suite},
      {"mixed_block", mixed_block_suite},         {"agreement", agreement_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  if (options.n != 1 && options.n != 2) throw InvalidInputError("verify supports n = 1 or n = 2");
  for (const auto& [suite, fn] : registry()) {
    if (suite != name) continue;
    try {
      return fn(options);
    } catch (const DisagreementError& e) {
      SuiteResult r;
      r.name = name;
      r.disagreements = 1;
      r.detail = e.what();
      return r;
    } catch (const Error& e) {
      SuiteResult r;
      r.name = name;
      r.numerical_failures = 1;
      r.detail = e.what();
      return r;
    }
  }
  throw InvalidInputError("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& options) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, options));
  return out;
}

}  // namespace metatoeplitz
