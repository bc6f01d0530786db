#pragma once

#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace metatoeplitz {

using cd = std::complex<double>;
using Index = Eigen::Index;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr cd kI{0.0, 1.0};

/// Thresholds shared by every definiteness test in the library.
///
/// `classification` is relative: an eigenvalue inside
/// [-classification * scale, classification * scale] counts as zero.
/// `boundary` is the wider band inside which an operator verdict is flagged
/// as lying on the bounded/compact boundary and witnesses are not compared.
struct Tolerances {
  double classification = 1e-9;
  double boundary = 1e-8;

  /// Defaults, with TOEPLITZ_TOL overriding `classification` when set.
  static Tolerances from_environment();
};

// Real coordinates of C^m are interleaved: (Re z_1, Im z_1, Re z_2, ...).

/// m x 2m matrix T with z = T r for the interleaved real vector r.
CMatrix complex_embedding(Index m);
RVector to_real(const CVector& z);
CVector to_complex(const RVector& r);

/// Real symmetric matrix R with r^T R r = rho^* herm rho.
RMatrix realify_hermitian(const CMatrix& herm);

enum class Definiteness { Definite, Semidefinite, Indefinite };

std::string_view to_string(Definiteness d);

/// Eigen-decomposition of a real symmetric form, classified for
/// positivity against `tol * scale`.
struct DefinitenessReport {
  RVector eigenvalues;  // ascending
  double scale = 0.0;
  Definiteness sign = Definiteness::Semidefinite;

  double min() const { return eigenvalues.size() ? eigenvalues(0) : 0.0; }
  double max() const { return eigenvalues.size() ? eigenvalues(eigenvalues.size() - 1) : 0.0; }
  double relative_min() const { return scale > 0.0 ? min() / scale : min(); }
};

/// Classifies x -> x^T form x as positive Definite / Semidefinite /
/// Indefinite. `reference_scale` is combined with the spectral norm of
/// `form` so that an exactly vanishing form has a nonzero tolerance band.
DefinitenessReport classify_positivity(const RMatrix& form, double reference_scale, double tol);

/// Largest absolute entry of A - A^T.
double symmetry_residual(const RMatrix& a);
double symmetry_residual(const CMatrix& a);

double spectral_norm(const CMatrix& a);
double spectral_norm(const RMatrix& a);

/// Non-conjugating Cholesky factor L (lower, M = L L^T) of a complex
/// symmetric matrix whose real part is positive definite. Pivots have
/// positive real part and their principal square roots are taken, so L
/// depends analytically on M.
CMatrix complex_symmetric_cholesky(const CMatrix& m);

/// Ratio of smallest to largest singular value; 0 for singular input.
double inverse_condition(const CMatrix& a);

}  // namespace metatoeplitz
