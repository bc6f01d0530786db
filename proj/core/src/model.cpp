#include "metatoeplitz/model.hpp"

#include <random>
#include <sstream>

#include "metatoeplitz/error.hpp"

namespace metatoeplitz {

ModelInstance::ModelInstance(cd lambda_, CMatrix a_) : lambda(lambda_), a(std::move(a_)) {
  if (a.rows() != a.cols() || a.rows() == 0) throw DimensionError("model: A must be square and nonempty");
  if (symmetry_residual(a) > 1e-12 * (1.0 + a.cwiseAbs().maxCoeff())) {
    throw InvalidInputError("model: A must be complex symmetric");
  }
  a = 0.5 * (a + a.transpose());
}

ModelInstance ModelInstance::scalar(cd lambda, cd a) { return ModelInstance(lambda, CMatrix::Constant(1, 1, a)); }

double ModelInstance::norm_a() const { return spectral_norm(a); }

Weight ModelInstance::weight() const { return Weight::isotropic(dim(), 0.25); }

ComplexQuadraticForm ModelInstance::symbol() const {
  const Index n = dim();
  // A xbar.xbar = 1/2 xbar.(2A) xbar
  return {CMatrix::Zero(n, n), lambda * CMatrix::Identity(n, n), 2.0 * a};
}

ToeplitzProblem ModelInstance::problem(Tolerances tol) const { return ToeplitzProblem(weight(), symbol(), tol); }

double model_boundedness_margin(const ModelInstance& m) {
  const double g2 = std::norm(m.gamma());
  return (1.0 - g2) / g2 - 4.0 * m.norm_a();
}

Verdict classify_model(const ModelInstance& m, double tol) {
  if (!m.admissible()) {
    std::ostringstream os;
    os << "model instance violates Re lambda + |A| < 1/4 (Re lambda = " << m.lambda.real()
       << ", |A| = " << m.norm_a() << ")";
    throw InadmissibleError(os.str());
  }
  const double g2 = std::norm(m.gamma());
  Verdict v;
  v.margin = model_boundedness_margin(m);
  v.scale = std::max({1.0, (1.0 - g2) / g2, 4.0 * m.norm_a()});
  v.boundary = std::abs(v.margin) <= tol * v.scale;
  if (v.boundary) {
    v.verdict = OperatorClass::BoundedNotCompact;
  } else {
    v.verdict = v.margin > 0.0 ? OperatorClass::Compact : OperatorClass::Unbounded;
  }
  return v;
}

LinearCanonicalMap model_kappa(const ModelInstance& m) {
  const Index n = m.dim();
  const cd g = m.gamma();
  CMatrix k = CMatrix::Zero(2 * n, 2 * n);
  k.topLeftCorner(n, n) = CMatrix::Identity(n, n) / g;
  k.topRightCorner(n, n) = -8.0 * kI * g * m.a;
  k.bottomRightCorner(n, n) = g * CMatrix::Identity(n, n);
  return LinearCanonicalMap(std::move(k));
}

AbcReduction positivity_abc(const ModelInstance& m) {
  const cd g = m.gamma();
  const double g2 = std::norm(g);
  if (!(g2 < 1.0)) throw PreconditionError("positivity_abc requires |gamma| < 1");
  AbcReduction r;
  r.a = 8.0 * g2 / (1.0 - g2) * (g / std::conj(g));
  r.b = 64.0 * g2 * g2 / (1.0 - g2);
  r.c = 4.0 * g2;
  r.a_sq_minus_b = std::norm(r.a) - r.b;
  // sup_eta |A eta|^2 / |eta|^2 = |A|^2
  const double na = m.norm_a();
  r.bounded = r.a_sq_minus_b <= 0.0 || r.c >= r.a_sq_minus_b * na * na;
  return r;
}

double sampled_takagi_norm(const CMatrix& a, int samples, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    CVector w(a.rows());
    for (Index k = 0; k < w.size(); ++k) w(k) = cd(normal(rng), normal(rng));
    w.normalize();
    // Fixed-point sweep w <- conj(A w)/|A w|, whose fixed points are Takagi
    // vectors; two steps are a power iteration on A^* A.
    double previous = -1.0;
    for (int it = 0; it < 2000; ++it) {
      const double value = std::abs((w.transpose() * a * w).value());
      best = std::max(best, value);
      if (it % 2 == 0) {
        if (std::abs(value - previous) <= 1e-15 * value) break;
        previous = value;
      }
      CVector next = (a * w).conjugate();
      const double len = next.norm();
      if (len == 0.0) break;
      w = next / len;
    }
    best = std::max(best, std::abs((w.transpose() * a * w).value()));
  }
  return best;
}

}  // namespace metatoeplitz
