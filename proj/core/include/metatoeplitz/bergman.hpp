#pragma once

#include "metatoeplitz/problem.hpp"
#include "metatoeplitz/symplectic.hpp"

namespace metatoeplitz {

/// Linear critical-point system of the coherent-state stationary phase,
///
///   [ 2H - Q''_{theta y}     -Q''_{theta theta}  ] [y    ]   [ 2H x     ]
///   [ -Q''_{yy}         2H^T - Q''_{y theta}     ] [theta] = [ 2H^T z   ]
///
/// with H the Levi form of a weight without pluriharmonic part.
struct CriticalSystem {
  CMatrix amat;
  CMatrix hermitian;
  double amat_inverse_condition = 0.0;
  double a11_inverse_condition = 0.0;
  double b22_inverse_condition = 0.0;  // lower-right block of amat^{-1}

  /// Critical point (y, theta) for given (x, z).
  std::pair<CVector, CVector> solve(const CVector& x, const CVector& z) const;
};

/// Requires an admissible problem whose weight has no pluriharmonic part.
/// Throws SingularSystemError if any of the three blocks is singular.
CriticalSystem critical_system(const ToeplitzProblem& problem);

/// Holomorphic quadratic form
///   f(x, z) = 1/2 x.fxx x + x.fxz z + 1/2 z.fzz z
/// with fxx, fzz symmetric and fxz invertible.
class BergmanForm {
 public:
  BergmanForm(CMatrix fxx, CMatrix fxz, CMatrix fzz);

  Index dim() const { return fxx_.rows(); }
  const CMatrix& fxx() const { return fxx_; }
  const CMatrix& fxz() const { return fxz_; }
  const CMatrix& fzz() const { return fzz_; }

  cd operator()(const CVector& x, const CVector& z) const;
  CVector dx(const CVector& x, const CVector& z) const;
  CVector dz(const CVector& x, const CVector& z) const;

 private:
  CMatrix fxx_, fxz_, fzz_;
};

/// f as the critical value of
///   2 theta.Hx + Q(y, theta) + 2 z.Hy - 2 theta.Hy   (halved),
/// obtained by one linear solve.
BergmanForm bergman_f(const ToeplitzProblem& problem);

/// The mixed block f''_{xz} from d_x f = H^T theta(x, z), i.e. H^T B22 2H^T.
CMatrix bergman_fxz_via_schur(const ToeplitzProblem& problem);

/// (k_w, k_z) up to a unimodular constant: exp(2 Psi0(z, wbar) - Phi0(z) - Phi0(w)).
cd coherent_overlap(const Weight& weight, const CVector& w, const CVector& z);

/// sup_x (4 Re f(x, wbar) - 2 Phi0(x)) - 2 Phi0(w), or +infinity when
/// 2 Re f(x, 0) - Phi0(x) fails to be negative definite.
double growth_exponent(const BergmanForm& f, const Weight& weight, const CVector& w,
                       double tol = Tolerances{}.classification);

/// Real 4n x 4n matrix of (x, w) -> Phi0(x) + Phi0(w) - 2 Re f(x, wbar).
RMatrix coherent_growth_form(const BergmanForm& f, const Weight& weight);

enum class Strictness { NonStrict, Strict };

/// 2 Re f(x, wbar) <= Phi0(x) + Phi0(w) everywhere (NonStrict), or < away
/// from the origin (Strict), decided on coherent_growth_form with the
/// standard tolerance band.
bool coherent_growth_criterion(const BergmanForm& f, const Weight& weight, Strictness strict,
                               double tol = Tolerances{}.classification);

DefinitenessReport coherent_growth_spectrum(const BergmanForm& f, const Weight& weight,
                                            double tol = Tolerances{}.classification);

/// Canonical transformation of the phase (2/i)(f(x, z) - Psi0(y, z)) with
/// fiber variable z.
LinearCanonicalMap bergman_kappa(const BergmanForm& f, const Weight& weight);

}  // namespace metatoeplitz
