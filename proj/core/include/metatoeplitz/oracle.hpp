#pragma once

#include <vector>

#include "metatoeplitz/problem.hpp"

namespace metatoeplitz {

/// Brute-force numerical ground truth for n <= 2.
///
/// Everything is computed in coordinates y = 2 R x with H = R^* R, in which
/// the weight becomes |y|^2/4 and the monomials
///   e_alpha(y) = y^alpha / sqrt((2 pi)^n 2^|alpha| alpha!)
/// form an orthonormal basis. The truncation keeps every multi-index of
/// total degree below `degree_bound`, ordered by degree.

struct QuadratureSpec {
  int order = 0;  // Gauss-Hermite points per real dimension; 0 selects the default
};

/// Default points per real dimension: max(80, N + 8) at n = 1 and
/// max(12, N + 4) at n = 2 for degree bound N. Any order >= N is exact for
/// the truncated matrix.
int default_quadrature_order(Index n, int degree_bound);

using MultiIndex = std::vector<int>;

/// Multi-indices of total degree < degree_bound in n variables, by degree.
std::vector<MultiIndex> truncated_basis(Index n, int degree_bound);

struct TruncatedOperator {
  int degree_bound = 0;
  int quadrature_order = 0;
  std::vector<MultiIndex> basis;
  /// matrix(k, j) = <e^q e_j, e_k>, so column j is the image of e_j.
  CMatrix matrix;

  Index size() const { return matrix.rows(); }
  /// Diagonal entries when the matrix is diagonal in the graded sense
  /// (|T_jk| <= 1e-12 sqrt(|T_jj T_kk|)), else a general eigen-solve.
  CVector eigenvalues() const;
  RVector singular_values() const;  // descending
  double norm() const;
  /// Leading block for a smaller degree bound.
  TruncatedOperator leading(int smaller_bound) const;
};

/// Galerkin matrix of Top(e^q) on the truncated monomial basis. The tensor
/// Gauss-Hermite rule is pushed through the complex-linear change of
/// variables that turns exp(q - 2 Phi0) into exp(-|s|^2/2), so the
/// polynomial part is integrated exactly. Requires n <= 2, an admissible
/// problem and no pluriharmonic part.
TruncatedOperator truncated_matrix(const ToeplitzProblem& problem, int degree_bound, QuadratureSpec spec = {});

enum class BoundednessHint { Plateau, Growing };

struct NormTrend {
  std::vector<int> degree_bounds;
  std::vector<double> norms;
  BoundednessHint hint = BoundednessHint::Growing;
  double last_relative_increase = 0.0;
};

/// Spectral norms of the truncations; Plateau when the relative increase
/// between the last two sizes is below 1e-3. A hint only: finite sections
/// cannot prove unboundedness.
NormTrend norm_trend(const ToeplitzProblem& problem, std::vector<int> degree_bounds, QuadratureSpec spec = {});

struct SingularDecay {
  double ratio = 1.0;  // least-squares geometric ratio per degree level
  RVector singular_values;
  int levels_used = 0;
};

/// Geometric decay ratio of the singular values of T_N, fitted over the
/// leading half of the degree levels.
SingularDecay singular_decay(const ToeplitzProblem& problem, int degree_bound, QuadratureSpec spec = {});

/// exp(1/4 (Phi0''_{x xbar})^{-1} d_x.d_xbar) e^q at x, realized as a
/// Gaussian convolution over R^2n and integrated by Gauss-Hermite (80 points
/// per dimension unless overridden).
/// Throws NotAbsolutelyConvergentError when the convolution diverges.
cd numeric_weyl(const ToeplitzProblem& problem, const CVector& x, QuadratureSpec spec = {});

/// Coefficients <k_w, e_alpha> of the normalized coherent state (unimodular
/// phase dropped).
CVector coherent_coefficients(const Weight& weight, const CVector& w, const std::vector<MultiIndex>& basis);

/// |Top(e^q) k_w| computed as |T_N c(w)|. A zero degree bound selects 80 at
/// n = 1 and 16 at n = 2.
double numeric_coherent_norm(const ToeplitzProblem& problem, const CVector& w, int degree_bound = 0,
                             QuadratureSpec spec = {});

struct CoherentSlope {
  std::vector<double> radii;
  std::vector<double> log_norms;
  double slope = 0.0;  // d log|Top k_{t u}| / d t^2, least squares
};

/// Log-norm slope along the ray t * direction over the given radii; the
/// direction is used as given, not normalized.
CoherentSlope coherent_log_norm_slope(const ToeplitzProblem& problem, const CVector& direction,
                                      const std::vector<double>& radii, int degree_bound = 0,
                                      QuadratureSpec spec = {});

/// (k_w, k_z) from truncated coefficient sums.
cd numeric_coherent_overlap(const Weight& weight, const CVector& w, const CVector& z, int degree_bound);

}  // namespace metatoeplitz
