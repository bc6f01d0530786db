#pragma once

#include "metatoeplitz/problem.hpp"
#include "metatoeplitz/symplectic.hpp"

namespace metatoeplitz {

/// Model family on Phi0 = |x|^2/4 with q(x) = lambda |x|^2 + A xbar.xbar.
struct ModelInstance {
  cd lambda;
  CMatrix a;  // complex symmetric n x n

  ModelInstance(cd lambda, CMatrix a);
  /// n = 1 with A the scalar `a`.
  static ModelInstance scalar(cd lambda, cd a);

  Index dim() const { return a.rows(); }
  cd gamma() const { return 1.0 / (1.0 - 2.0 * lambda); }
  /// Euclidean operator norm of A (largest singular value).
  double norm_a() const;
  bool admissible() const { return lambda.real() + norm_a() < 0.25; }

  Weight weight() const;
  ComplexQuadraticForm symbol() const;
  ToeplitzProblem problem(Tolerances tol = Tolerances::from_environment()) const;
};

/// (1 - |gamma|^2)/|gamma|^2 - 4 |A|; nonnegative iff bounded.
double model_boundedness_margin(const ModelInstance& m);

/// Closed-form verdict. Equality within `tol` relative is bounded but not
/// compact. Throws InadmissibleError outside Re lambda + |A| < 1/4.
Verdict classify_model(const ModelInstance& m, double tol = Tolerances{}.boundary);

/// (y, eta) -> (y/gamma - 8i gamma A eta, gamma eta)
LinearCanonicalMap model_kappa(const ModelInstance& m);

struct AbcReduction {
  cd a;
  double b = 0.0;
  double c = 0.0;
  double a_sq_minus_b = 0.0;  // |a|^2 - b = 64|gamma|^6 / (1-|gamma|^2)^2
  bool bounded = false;       // c |eta|^2 >= (|a|^2 - b) |A eta|^2 for all eta
};

/// Completion-of-squares reduction of the positivity inequality, valid for
/// |gamma| < 1. Throws PreconditionError otherwise.
AbcReduction positivity_abc(const ModelInstance& m);

/// Largest |w.A w| over sampled unit vectors w; approaches |A| from below
/// for complex symmetric A.
double sampled_takagi_norm(const CMatrix& a, int samples, unsigned seed);

}  // namespace metatoeplitz
