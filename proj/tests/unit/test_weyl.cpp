#include "support.hpp"

#include <numbers>

#include "metatoeplitz/error.hpp"
#include "metatoeplitz/model.hpp"
#include "metatoeplitz/random_instances.hpp"
#include "metatoeplitz/weyl.hpp"

using namespace metatoeplitz;
using namespace testing_support;

namespace {

// exp(1/4 dx dxbar) e^q at x for Phi0 = |x|^2/4, n = 1: the heat kernel
// (1/pi) e^{-|s|^2} convolved with e^q, by the trapezoid rule on a square.
cd heat_flow(const ComplexQuadraticForm& q, cd x) {
  const double half = 8.0, step = 0.04;
  const int m = static_cast<int>(2 * half / step);
  cd sum = 0.0;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      const cd s(-half + i * step, -half + j * step);
      CVector pt(1);
      pt(0) = x - s;
      sum += std::exp(q(pt) - std::norm(s));
    }
  }
  return sum * step * step / std::numbers::pi;
}

}  // namespace

TEST_CASE("Mehler coefficient for the scalar model") {
  for (cd lambda : {cd(-0.5, 0), cd(0, 1), cd(0.2, 0), cd(-1.3, -0.7)}) {
    const WeylSymbol a = weyl_symbol(ModelInstance::scalar(lambda, 0.0).problem());
    CHECK(std::abs(a.exponent.xbarx()(0, 0) - lambda / (1.0 - lambda)) < 1e-13);
    CHECK(std::abs(a.exponent.xx()(0, 0)) < 1e-15);
    CHECK(a.prefactor_modulus() == doctest::Approx(1.0 / std::abs(1.0 - lambda)).epsilon(1e-13));
  }
}

TEST_CASE("closed form matches a brute-force heat flow") {
  const ComplexQuadraticForm q(CMatrix::Constant(1, 1, cd(0.1, 0.05)), CMatrix::Constant(1, 1, cd(-0.3, 0.4)),
                               CMatrix::Constant(1, 1, cd(0.05, -0.1)));
  const ToeplitzProblem p(Weight::isotropic(1, 0.25), q);
  const WeylSymbol a = weyl_symbol(p);
  for (cd x : {cd(0, 0), cd(0.5, -0.3), cd(1.2, 0.8)}) {
    CVector pt(1);
    pt(0) = x;
    const cd expected = heat_flow(q, x);
    CHECK(std::abs(a(pt) - expected) < 1e-9 * std::abs(expected));
  }
}

TEST_CASE("symbol classification follows |gamma|") {
  auto cls = [](cd lambda) { return classify_symbol(weyl_symbol(ModelInstance::scalar(lambda, 0.0).problem())).cls; };
  CHECK(cls(-0.5) == SymbolClass::VanishingAtInfinity);
  CHECK(cls(cd(0, 1)) == SymbolClass::VanishingAtInfinity);
  CHECK(cls(0.2) == SymbolClass::Unbounded);
  CHECK(cls(0.0) == SymbolClass::BoundedNotVanishing);
  CHECK(to_string(SymbolClass::VanishingAtInfinity) == "vanishing_at_infinity");
}

TEST_CASE("a multiple of the Levi form reduces to the scalar Mehler formula") {
  // q = mu x^* H x is lambda |y|^2 with lambda = mu/4 in coordinates where
  // Phi0 = |y|^2/4, so G = 4 lambda/(1 - lambda) x^* H x and |C| = |1 - lambda|^{-n}.
  InstanceGenerator gen(40);
  for (int i = 0; i < 10; ++i) {
    const Weight w = gen.weight(2, false);
    const cd mu(gen.uniform(-3.0, 0.9), gen.uniform(-2.0, 2.0));
    const ToeplitzProblem p(w, ComplexQuadraticForm(CMatrix::Zero(2, 2), mu * w.hermitian(), CMatrix::Zero(2, 2)));
    REQUIRE(p.admissible());
    const cd lambda = mu / 4.0;
    const WeylSymbol a = weyl_symbol(p);
    CHECK(max_abs(a.exponent.xbarx() - 4.0 * lambda / (1.0 - lambda) * w.hermitian()) < 1e-12);
    CHECK(max_abs(a.exponent.xx()) + max_abs(a.exponent.xbarxbar()) < 1e-12);
    CHECK(a.prefactor_modulus() == doctest::Approx(std::pow(std::abs(1.0 - lambda), -2.0)).epsilon(1e-12));
  }
}

TEST_CASE("inadmissible problems are rejected") {
  CHECK_THROWS_AS(weyl_symbol(ModelInstance::scalar(0.3, 0.0).problem()), InadmissibleError);
}
