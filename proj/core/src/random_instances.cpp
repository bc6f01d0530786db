#include "metatoeplitz/random_instances.hpp"

#include <cmath>
#include <numbers>

#include "metatoeplitz/error.hpp"

namespace metatoeplitz {

InstanceGenerator::InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

double InstanceGenerator::uniform(double lo, double hi) {
  // 53 random bits, so the stream does not depend on the library's distribution code.
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double InstanceGenerator::normal() {
  // Box-Muller; u1 in (0, 1].
  const double u1 = 1.0 - uniform(0.0, 1.0);
  const double u2 = uniform(0.0, 1.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cd InstanceGenerator::complex_normal() {
  const double re = normal();
  return {re, normal()};
}

CMatrix InstanceGenerator::complex_matrix(Index n) {
  CMatrix m(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) m(i, j) = complex_normal();
  }
  return m;
}

CMatrix InstanceGenerator::symmetric_matrix(Index n) {
  const CMatrix m = complex_matrix(n);
  return 0.5 * (m + m.transpose());
}

CVector InstanceGenerator::complex_vector(Index n) {
  CVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = complex_normal();
  return v;
}

Weight InstanceGenerator::weight(Index n, bool pluriharmonic) {
  const CMatrix x = complex_matrix(n);
  CMatrix h = x.adjoint() * x / static_cast<double>(n) + 0.3 * CMatrix::Identity(n, n);
  h = 0.5 * (h + h.adjoint());
  if (!pluriharmonic) return Weight(h);
  return Weight(h, 0.3 * symmetric_matrix(n));
}

ToeplitzProblem InstanceGenerator::admissible_problem(Index n, InstanceMix mix, bool pluriharmonic) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Weight w = weight(n, pluriharmonic);
    const RMatrix herm = realify_hermitian(w.hermitian());
    if (mix == InstanceMix::General) {
      const ComplexQuadraticForm raw(symmetric_matrix(n), complex_matrix(n), symmetric_matrix(n));
      // Largest generalized eigenvalue of Re q against Phi_herm.
      Eigen::GeneralizedSelfAdjointEigenSolver<RMatrix> ges(raw.real_part_form(), herm,
                                                            Eigen::EigenvaluesOnly);
      const double top = ges.eigenvalues().maxCoeff();
      const double s = uniform(0.2, 0.95) / std::max(top, 1e-3);
      ToeplitzProblem p(w, raw * cd(s, 0.0));
      if (p.admissible()) return p;
    } else {
      const double mu = uniform(0.5, 2.0);
      const double eps = uniform(0.0, 0.15);
      const CMatrix xbarx = -mu * w.hermitian() + eps * complex_matrix(n);
      ToeplitzProblem p(w, ComplexQuadraticForm(eps * symmetric_matrix(n), xbarx, eps * symmetric_matrix(n)));
      if (p.admissible()) return p;
    }
  }
  throw PreconditionError("could not draw an admissible instance");
}

cd InstanceGenerator::admissible_lambda() {
  const double re = uniform(-2.0, 0.24);
  return {re, uniform(-1.5, 1.5)};
}

ModelInstance InstanceGenerator::admissible_model(Index n) {
  const cd lambda = admissible_lambda();
  CMatrix a = symmetric_matrix(n);
  Eigen::JacobiSVD<CMatrix> svd(a);
  const double room = 0.25 - lambda.real();
  const double target = uniform(0.0, 0.95) * std::min(room, 0.5);
  a *= target / std::max(svd.singularValues()(0), 1e-300);
  return ModelInstance(lambda, a);
}

}  // namespace metatoeplitz
