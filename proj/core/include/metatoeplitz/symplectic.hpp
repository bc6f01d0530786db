#pragma once

#include "metatoeplitz/forms.hpp"
#include "metatoeplitz/linalg.hpp"

namespace metatoeplitz {

/// A point rho = (x, xi) of C^n_x x C^n_xi.
struct PhasePoint {
  CVector x;
  CVector xi;

  Index dim() const { return x.size(); }
  CVector stacked() const;
  static PhasePoint from_stacked(const CVector& v);
};

/// Matrix J of sigma = sum d xi_j ^ d x_j, i.e. sigma(rho, rho') = rho^T J rho'.
CMatrix symplectic_matrix(Index n);

/// sigma(rho, rho') = xi.x' - xi'.x
cd symplectic_product(const PhasePoint& rho, const PhasePoint& rho_prime);

/// The point (x, (2/i) dPhi0/dx (x)) of Lambda_Phi0.
PhasePoint lambda_point(const Weight& weight, const CVector& x);

/// Complex linear map of C^2n preserving sigma, acting on stacked (x, xi).
class LinearCanonicalMap {
 public:
  /// Throws InvalidInputError when K^T J K deviates from J by more than
  /// 1e-8 relative to |K|^2.
  explicit LinearCanonicalMap(CMatrix k);

  static LinearCanonicalMap identity(Index n);

  Index dim() const { return k_.rows() / 2; }
  const CMatrix& matrix() const { return k_; }

  PhasePoint operator()(const PhasePoint& rho) const;
  LinearCanonicalMap operator*(const LinearCanonicalMap& rhs) const;  // composition
  LinearCanonicalMap inverse() const;

  /// Largest entry of K^T J K - J.
  double symplectic_residual() const;

 private:
  CMatrix k_;
};

/// Antilinear map rho -> M conj(rho).
class AntilinearInvolution {
 public:
  explicit AntilinearInvolution(CMatrix m);

  Index dim() const { return m_.rows() / 2; }
  const CMatrix& matrix() const { return m_; }
  PhasePoint operator()(const PhasePoint& rho) const;

  /// Largest entry of M conj(M) - I.
  double involution_residual() const;

 private:
  CMatrix m_;
};

/// kappa_A : (y, eta) -> (y, eta - A y), A symmetric.
LinearCanonicalMap kappa_A(const CMatrix& a_matrix);

/// The antilinear involution fixing Lambda_Phi0. Closed form for the
/// Hermitian part, conjugated by kappa_A when Phi0 has a pluriharmonic part.
AntilinearInvolution involution_for_weight(const Weight& weight);

/// Same involution built directly from a real basis B of Lambda_Phi0:
/// iota = B conj(B)^{-1} conj(.). Independent of involution_for_weight.
AntilinearInvolution involution_from_lagrangian(const Weight& weight);

/// Holomorphic quadratic phase F(x, y, theta) with x, y in C^n and fiber
/// variable theta in C^m, given by its symmetric Hessian blocks (row
/// variable first, so `xtheta` is n x m).
struct QuadraticPhase {
  CMatrix xx, xy, xtheta, yy, ytheta, thetatheta;

  Index dim() const { return xx.rows(); }
  Index fiber_dim() const { return thetatheta.rows(); }
  cd operator()(const CVector& x, const CVector& y, const CVector& theta) const;
  CVector dx(const CVector& x, const CVector& y, const CVector& theta) const;
  CVector dy(const CVector& x, const CVector& y, const CVector& theta) const;
  CVector dtheta(const CVector& x, const CVector& y, const CVector& theta) const;
};

/// Canonical transformation (y, -F'_y) -> (x, F'_x) on F'_theta = 0.
/// Throws DegeneratePhaseError when the critical system is singular.
LinearCanonicalMap canonical_from_phase(const QuadraticPhase& phase);

/// Real symmetric 4n x 4n matrix of rho -> (1/i) sigma(rho, iota rho) in
/// interleaved real coordinates.
RMatrix involution_base_form(const AntilinearInvolution& iota);

/// The real quadratic form
///   rho -> (1/i) (sigma(K rho, iota K rho) - sigma(rho, iota rho))
/// together with its eigenvalue classification.
struct PositivityCertificate {
  RMatrix pmat;
  DefinitenessReport spectrum;
  double imag_residue = 0.0;
  double symmetry_residue = 0.0;

  Definiteness classification() const { return spectrum.sign; }
  double margin() const { return spectrum.min(); }
};

PositivityCertificate positivity_certificate(const LinearCanonicalMap& k, const AntilinearInvolution& iota,
                                             double tol = Tolerances{}.classification);

}  // namespace metatoeplitz
