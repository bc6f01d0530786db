#pragma once

#include <string>

#include "metatoeplitz/linalg.hpp"

namespace metatoeplitz {

/// Complex valued quadratic form on C^n, stored as three Hessian blocks:
///
///   q(x) = 1/2 x.Qxx x + xbar.Qxbx x + 1/2 xbar.Qxbxb xbar
///
/// where a.b is the bilinear product and Qxbx has its row index on xbar.
/// The diagonal blocks are symmetric.
class ComplexQuadraticForm {
 public:
  ComplexQuadraticForm(CMatrix xx, CMatrix xbarx, CMatrix xbarxbar);

  static ComplexQuadraticForm zero(Index n);

  Index dim() const { return xx_.rows(); }
  const CMatrix& xx() const { return xx_; }
  const CMatrix& xbarx() const { return xbarx_; }
  const CMatrix& xbarxbar() const { return xbarxbar_; }

  cd operator()(const CVector& x) const;

  /// 2n x 2n symmetric Hessian in the variables (x, xbar).
  CMatrix hessian() const;

  /// Real symmetric 2n x 2n matrices R with Re q(r) = r^T R r (resp. Im).
  RMatrix real_part_form() const;
  RMatrix imag_part_form() const;

  bool is_real_valued(double tol = 1e-12) const;

  /// The form x -> q(S x).
  ComplexQuadraticForm pulled_back(const CMatrix& s) const;

  ComplexQuadraticForm operator+(const ComplexQuadraticForm& other) const;
  ComplexQuadraticForm operator-(const ComplexQuadraticForm& other) const;
  ComplexQuadraticForm operator*(cd factor) const;

 private:
  CMatrix xx_;
  CMatrix xbarx_;
  CMatrix xbarxbar_;
};

/// Strictly plurisubharmonic quadratic weight
///
///   Phi0(x) = xbar.H x + Re(x.P x)
///
/// with H Hermitian positive definite (the Levi form) and P symmetric.
class Weight {
 public:
  Weight(CMatrix hermitian, CMatrix pluriharmonic);
  explicit Weight(CMatrix hermitian);

  /// Phi0 = c |x|^2.
  static Weight isotropic(Index n, double c);

  Index dim() const { return h_.rows(); }
  const CMatrix& hermitian() const { return h_; }
  const CMatrix& pluriharmonic() const { return p_; }
  bool has_pluriharmonic_part() const { return p_.cwiseAbs().maxCoeff() > 0.0; }
  double min_levi_eigenvalue() const { return min_levi_eigenvalue_; }

  double operator()(const CVector& x) const;

  /// Phi0 as a (real valued) complex quadratic form.
  ComplexQuadraticForm as_form() const;

 private:
  CMatrix h_;
  CMatrix p_;
  double min_levi_eigenvalue_ = 0.0;
};

/// Holomorphic quadratic form on C^n_y x C^n_theta:
///
///   G(y, theta) = 1/2 y.Gyy y + theta.Gthetay y + 1/2 theta.Gthetatheta theta
struct HolomorphicQuadraticForm2n {
  CMatrix yy;
  CMatrix thetay;
  CMatrix thetatheta;

  Index dim() const { return yy.rows(); }
  cd operator()(const CVector& y, const CVector& theta) const;
  CMatrix hessian() const;
};

/// Polarization: the holomorphic form obtained by substituting xbar -> theta.
HolomorphicQuadraticForm2n polarize(const ComplexQuadraticForm& form);

struct AdmissibilityReport {
  bool ok = false;
  bool positivity_ok = false;   // Phi_herm - Re q positive definite
  bool determinant_ok = false;  // det(2H - Qxbx) != 0
  double positivity_margin = 0.0;  // smallest eigenvalue of Phi_herm - Re q
  double positivity_scale = 0.0;
  double determinant_modulus = 0.0;
  double determinant_threshold = 0.0;
  std::string message;
};

/// Checks Re q < Phi_herm on C^n \ {0} and det d_x d_xbar (2 Phi0 - q) != 0.
AdmissibilityReport check_admissible(const Weight& weight, const ComplexQuadraticForm& q,
                                     double tol = Tolerances{}.classification);

struct PluriharmonicSplit {
  Weight hermitian_part;  // same H, P = 0
  CMatrix a_matrix;       // (2/i) P
};

PluriharmonicSplit split_herm_plh(const Weight& weight);

/// Whether the polarization of g is a non-degenerate holomorphic form.
/// Requires Re g negative definite; throws PreconditionError otherwise.
bool check_polar_nondegenerate(const ComplexQuadraticForm& g, double tol = Tolerances{}.classification);

}  // namespace metatoeplitz
