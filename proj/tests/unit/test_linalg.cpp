#include "support.hpp"

#include "metatoeplitz/error.hpp"
#include "metatoeplitz/linalg.hpp"

using namespace metatoeplitz;
using namespace testing_support;

TEST_CASE("interleaved real coordinates round trip") {
  std::mt19937_64 rng(1);
  const CVector z = random_vector(rng, 3);
  const RVector r = to_real(z);
  CHECK(r(0) == z(0).real());
  CHECK(r(1) == z(0).imag());
  CHECK(r(5) == z(2).imag());
  CHECK(max_abs(to_complex(r) - z) == 0.0);
  CHECK(max_abs(complex_embedding(3) * r.cast<cd>() - z) < 1e-15);
}

TEST_CASE("realified Hermitian form reproduces x^* H x") {
  std::mt19937_64 rng(2);
  const CMatrix h = random_hermitian_pd(rng, 3);
  const RMatrix r = realify_hermitian(h);
  CHECK(symmetry_residual(r) < 1e-15);
  for (int k = 0; k < 5; ++k) {
    const CVector z = random_vector(rng, 3);
    const double direct = (z.adjoint() * h * z).value().real();
    const RVector x = to_real(z);
    CHECK(x.dot(r * x) == doctest::Approx(direct).epsilon(1e-13));
  }
}

TEST_CASE("positivity classification uses a relative band") {
  RMatrix d = RMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 0.5;
  CHECK(classify_positivity(d, 0.0, 1e-9).sign == Definiteness::Definite);
  d(1, 1) = 1e-12;
  CHECK(classify_positivity(d, 0.0, 1e-9).sign == Definiteness::Semidefinite);
  d(1, 1) = -1e-3;
  const auto rep = classify_positivity(d, 0.0, 1e-9);
  CHECK(rep.sign == Definiteness::Indefinite);
  CHECK(rep.min() == doctest::Approx(-1e-3));
  CHECK(rep.max() == doctest::Approx(1.0));
  // An exactly vanishing form is semidefinite once a reference scale is given.
  CHECK(classify_positivity(RMatrix::Zero(2, 2), 1.0, 1e-9).sign == Definiteness::Semidefinite);
  CHECK(to_string(Definiteness::Indefinite) == "indefinite");
}

TEST_CASE("complex symmetric Cholesky factor") {
  std::mt19937_64 rng(3);
  const CMatrix s = random_symmetric(rng, 4);
  const CMatrix m = 5.0 * CMatrix::Identity(4, 4) + 0.5 * s;
  const CMatrix l = complex_symmetric_cholesky(m);
  CHECK(max_abs(l * l.transpose() - m) < 1e-13);
  CHECK(max_abs(CMatrix(l.triangularView<Eigen::StrictlyUpper>())) == 0.0);
  for (Index i = 0; i < 4; ++i) CHECK(l(i, i).real() > 0.0);

  CMatrix bad = CMatrix::Identity(2, 2);
  bad(1, 1) = -1.0;
  CHECK_THROWS_AS(complex_symmetric_cholesky(bad), PreconditionError);
}

TEST_CASE("norms and conditioning") {
  CMatrix a = CMatrix::Zero(2, 2);
  a(0, 0) = 3.0;
  a(1, 1) = cd(0.0, -0.5);
  CHECK(spectral_norm(a) == doctest::Approx(3.0));
  CHECK(inverse_condition(a) == doctest::Approx(0.5 / 3.0));
  a(1, 1) = 0.0;
  CHECK(inverse_condition(a) == 0.0);
}

TEST_CASE("tolerances from the environment") {
  ::setenv("TOEPLITZ_TOL", "1e-6", 1);
  CHECK(Tolerances::from_environment().classification == 1e-6);
  ::unsetenv("TOEPLITZ_TOL");
  CHECK(Tolerances::from_environment().classification == 1e-9);
  CHECK(Tolerances::from_environment().boundary == 1e-8);
}
