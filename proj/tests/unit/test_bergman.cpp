#include "support.hpp"

#include <numbers>

#include "metatoeplitz/bergman.hpp"
#include "metatoeplitz/error.hpp"
#include "metatoeplitz/model.hpp"
#include "metatoeplitz/oracle.hpp"
#include "metatoeplitz/random_instances.hpp"
#include "metatoeplitz/toeplitz.hpp"

using namespace metatoeplitz;
using namespace testing_support;

TEST_CASE("q = 0 reproduces the polarized weight") {
  std::mt19937_64 rng(50);
  for (Index n : {1, 2, 3}) {
    const CMatrix h = random_hermitian_pd(rng, n);
    const BergmanForm f = bergman_f(ToeplitzProblem(Weight(h), ComplexQuadraticForm::zero(n)));
    CHECK(max_abs(f.fxz() - h.transpose()) <= 1e-14 * max_abs(h));
    CHECK(max_abs(f.fxx()) <= 1e-14);
    CHECK(max_abs(f.fzz()) <= 1e-14);
  }
  const BergmanForm quarter = bergman_f(ToeplitzProblem(Weight::isotropic(1, 0.25), ComplexQuadraticForm::zero(1)));
  CHECK(quarter.fxz()(0, 0) == cd(0.25, 0.0));
}

TEST_CASE("model family closed form") {
  InstanceGenerator gen(51);
  for (int i = 0; i < 20; ++i) {
    const ModelInstance m = gen.admissible_model(2);
    const BergmanForm f = bergman_f(m.problem());
    const cd g = m.gamma();
    CHECK(max_abs(f.fxz() - (g / 4.0) * CMatrix::Identity(2, 2)) < 1e-12);
    CHECK(max_abs(f.fzz() - g * g * m.a) < 1e-12);
    CHECK(max_abs(f.fxx()) < 1e-12);
    CHECK(max_abs(bergman_fxz_via_schur(m.problem()) - f.fxz()) < 1e-12);
  }
}

TEST_CASE("Top(e^q) of a coherent state is exp(2 f(x, wbar)) up to a constant") {
  // Independent route: apply the quadrature-built matrix to the kernel
  // coefficients and evaluate the series pointwise.
  InstanceGenerator gen(52);
  const ToeplitzProblem p = gen.admissible_problem(1, InstanceMix::CompactBiased);
  const BergmanForm f = bergman_f(p);
  const TruncatedOperator op = truncated_matrix(p, 80);
  const double r = std::sqrt(p.weight().hermitian()(0, 0).real());  // H = R^2, y = 2 R x
  CVector w(1);
  w(0) = cd(0.3, -0.2) / r;
  const CVector image = op.matrix * coherent_coefficients(p.weight(), w, op.basis);
  auto series = [&](cd x) {
    const cd y = 2.0 * r * x;
    cd s = 0.0;
    for (Index k = 0; k < op.size(); ++k) {
      const int a = op.basis[static_cast<std::size_t>(k)][0];
      s += image(k) * std::exp(static_cast<double>(a) * std::log(y) - 0.5 * (std::log(2 * std::numbers::pi) + a * std::log(2.0) + std::lgamma(a + 1.0)));
    }
    return s;
  };
  CVector zbar = w.conjugate();
  std::vector<cd> ratios;
  for (cd x : {cd(0.2, 0.1), cd(-0.4, 0.3), cd(0.1, -0.5)}) {
    CVector xv(1);
    xv(0) = x / r;
    ratios.push_back(series(xv(0)) / std::exp(2.0 * f(xv, zbar)));
  }
  CHECK(std::abs(ratios[1] / ratios[0] - 1.0) < 1e-9);
  CHECK(std::abs(ratios[2] / ratios[0] - 1.0) < 1e-9);
}

TEST_CASE("growth criterion and Bergman map on the model family") {
  auto bounded = [](cd lambda, cd a, Strictness s) {
    const ModelInstance m = ModelInstance::scalar(lambda, a);
    return coherent_growth_criterion(bergman_f(m.problem()), m.weight(), s);
  };
  CHECK(bounded(-0.5, 0.0, Strictness::Strict));
  CHECK(bounded(0.0, 0.0, Strictness::NonStrict));
  CHECK_FALSE(bounded(0.0, 0.0, Strictness::Strict));
  CHECK_FALSE(bounded(0.0, 0.1, Strictness::NonStrict));
  CHECK_FALSE(bounded(0.2, 0.0, Strictness::NonStrict));

  InstanceGenerator gen(53);
  for (int i = 0; i < 10; ++i) {
    const ModelInstance m = gen.admissible_model(1);
    const LinearCanonicalMap k = bergman_kappa(bergman_f(m.problem()), m.weight());
    CHECK(max_abs(k.matrix() - model_kappa(m).matrix()) < 1e-11 * std::max(1.0, max_abs(model_kappa(m).matrix())));
  }
}

TEST_CASE("growth exponent of the model family") {
  const ModelInstance m = ModelInstance::scalar(-0.5, 0.0);
  const BergmanForm f = bergman_f(m.problem());
  CVector w(1);
  w(0) = cd(1.0, 1.0);
  // (|gamma|^2 - 1) |w|^2 / 2 with gamma = 1/2
  CHECK(growth_exponent(f, m.weight(), w) == doctest::Approx(-0.75).epsilon(1e-12));
  // lambda = 0, A = 0.1: f = xz/4 + z^2/20 grows along real w by 0.2 |w|^2.
  const ModelInstance wild = ModelInstance::scalar(0.0, 0.1);
  CVector one(1);
  one(0) = 1.0;
  CHECK(growth_exponent(bergman_f(wild.problem()), wild.weight(), one) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(growth_exponent(bergman_f(wild.problem()), wild.weight(), 2.0 * one) == doctest::Approx(0.8).epsilon(1e-12));
  // A large x-x block makes the x-supremum infinite.
  const BergmanForm steep(CMatrix::Ones(1, 1), CMatrix::Ones(1, 1), CMatrix::Zero(1, 1));
  CHECK(std::isinf(growth_exponent(steep, wild.weight(), one)));
  CHECK(coherent_growth_spectrum(f, m.weight()).sign == Definiteness::Definite);
  CHECK(coherent_growth_form(f, m.weight()).rows() == 4);
}

TEST_CASE("coherent overlap law") {
  const Weight w = Weight::isotropic(2, 0.25);
  std::mt19937_64 rng(54);
  for (int i = 0; i < 5; ++i) {
    const CVector a = random_vector(rng, 2), b = random_vector(rng, 2);
    CHECK(std::abs(coherent_overlap(w, a, b)) == doctest::Approx(std::exp(-(a - b).squaredNorm() / 4)).epsilon(1e-13));
  }
}

TEST_CASE("preconditions") {
  std::mt19937_64 rng(55);
  const ToeplitzProblem plh(Weight(random_hermitian_pd(rng, 1), random_symmetric(rng, 1)), ComplexQuadraticForm::zero(1));
  CHECK_THROWS_AS(bergman_f(plh), PreconditionError);
  CHECK_THROWS_AS(bergman_f(ModelInstance::scalar(0.3, 0.0).problem()), InadmissibleError);
  CHECK_THROWS_AS(BergmanForm(CMatrix::Zero(1, 1), CMatrix::Zero(1, 1), CMatrix::Zero(1, 1)), SingularSystemError);
  const CriticalSystem cs = critical_system(ModelInstance::scalar(-0.5, 0.0).problem());
  CHECK(cs.amat_inverse_condition > 0.1);
  CVector x(1), z(1);
  x(0) = 1.0;
  z(0) = kI;
  const auto [y, theta] = cs.solve(x, z);
  CHECK(y.size() == 1);
  CHECK(theta.size() == 1);
}
