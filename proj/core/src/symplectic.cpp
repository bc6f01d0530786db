#include "metatoeplitz/symplectic.hpp"

#include <sstream>

#include "metatoeplitz/error.hpp"

namespace metatoeplitz {

CVector PhasePoint::stacked() const {
  CVector v(2 * dim());
  v << x, xi;
  return v;
}

PhasePoint PhasePoint::from_stacked(const CVector& v) {
  const Index n = v.size() / 2;
  return {v.head(n), v.tail(n)};
}

CMatrix symplectic_matrix(Index n) {
  CMatrix j = CMatrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -CMatrix::Identity(n, n);
  j.bottomLeftCorner(n, n) = CMatrix::Identity(n, n);
  return j;
}

cd symplectic_product(const PhasePoint& rho, const PhasePoint& rho_prime) {
  if (rho.dim() != rho_prime.dim() || rho.x.size() != rho.xi.size() ||
      rho_prime.x.size() != rho_prime.xi.size()) {
    throw DimensionError("symplectic product of points of different dimension");
  }
  return (rho.xi.transpose() * rho_prime.x).value() - (rho_prime.xi.transpose() * rho.x).value();
}

PhasePoint lambda_point(const Weight& weight, const CVector& x) {
  if (x.size() != weight.dim()) throw DimensionError("lambda_point: dimension mismatch");
  // dPhi0/dx = H^T xbar + P x
  const CVector grad = weight.hermitian().transpose() * x.conjugate() + weight.pluriharmonic() * x;
  return {x, (2.0 / kI) * grad};
}

LinearCanonicalMap::LinearCanonicalMap(CMatrix k) : k_(std::move(k)) {
  if (k_.rows() != k_.cols() || k_.rows() % 2 != 0) {
    throw DimensionError("canonical map must be a square matrix of even size");
  }
  const double norm = k_.cwiseAbs().maxCoeff();
  const double residual = symplectic_residual();
  if (residual > 1e-8 * std::max(1.0, norm * norm)) {
    std::ostringstream os;
    os << "matrix is not symplectic (|K^T J K - J| = " << residual << ")";
    throw InvalidInputError(os.str());
  }
}

LinearCanonicalMap LinearCanonicalMap::identity(Index n) {
  return LinearCanonicalMap(CMatrix::Identity(2 * n, 2 * n));
}

PhasePoint LinearCanonicalMap::operator()(const PhasePoint& rho) const {
  if (rho.dim() != dim()) throw DimensionError("canonical map applied to a point of wrong dimension");
  return PhasePoint::from_stacked(k_ * rho.stacked());
}

LinearCanonicalMap LinearCanonicalMap::operator*(const LinearCanonicalMap& rhs) const {
  if (rhs.dim() != dim()) throw DimensionError("composing canonical maps of different dimension");
  return LinearCanonicalMap(k_ * rhs.k_);
}

LinearCanonicalMap LinearCanonicalMap::inverse() const {
  // K^{-1} = -J K^T J
  const CMatrix j = symplectic_matrix(dim());
  return LinearCanonicalMap(-j * k_.transpose() * j);
}

double LinearCanonicalMap::symplectic_residual() const {
  const CMatrix j = symplectic_matrix(dim());
  return (k_.transpose() * j * k_ - j).cwiseAbs().maxCoeff();
}

AntilinearInvolution::AntilinearInvolution(CMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() % 2 != 0) {
    throw DimensionError("involution must be a square matrix of even size");
  }
}

PhasePoint AntilinearInvolution::operator()(const PhasePoint& rho) const {
  if (rho.dim() != dim()) throw DimensionError("involution applied to a point of wrong dimension");
  return PhasePoint::from_stacked(m_ * rho.stacked().conjugate());
}

double AntilinearInvolution::involution_residual() const {
  return (m_ * m_.conjugate() - CMatrix::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff();
}

LinearCanonicalMap kappa_A(const CMatrix& a_matrix) {
  const Index n = a_matrix.rows();
  if (a_matrix.cols() != n) throw DimensionError("kappa_A: A must be square");
  if (symmetry_residual(a_matrix) > 1e-12 * (1.0 + a_matrix.cwiseAbs().maxCoeff())) {
    throw InvalidInputError("kappa_A: A must be symmetric");
  }
  CMatrix k = CMatrix::Identity(2 * n, 2 * n);
  k.bottomLeftCorner(n, n) = -0.5 * (a_matrix + a_matrix.transpose());
  return LinearCanonicalMap(std::move(k));
}

AntilinearInvolution involution_for_weight(const Weight& weight) {
  const Index n = weight.dim();
  // Lambda_herm = {(x, M_H xbar)}, M_H = (2/i) H^T; iota(y, eta) = (conj(M_H)^{-1} conj(eta), M_H conj(y)).
  const CMatrix mh = (2.0 / kI) * weight.hermitian().transpose();
  CMatrix m = CMatrix::Zero(2 * n, 2 * n);
  m.topRightCorner(n, n) = mh.conjugate().inverse();
  m.bottomLeftCorner(n, n) = mh;
  if (!weight.has_pluriharmonic_part()) return AntilinearInvolution(std::move(m));

  // iota_Phi0 = kappa_A^{-1} o iota_herm o kappa_A
  const CMatrix ka = kappa_A(split_herm_plh(weight).a_matrix).matrix();
  const CMatrix ka_inv = LinearCanonicalMap(ka).inverse().matrix();
  return AntilinearInvolution(ka_inv * m * ka.conjugate());
}

AntilinearInvolution involution_from_lagrangian(const Weight& weight) {
  const Index n = weight.dim();
  CMatrix basis(2 * n, 2 * n);
  for (Index j = 0; j < n; ++j) {
    CVector e = CVector::Zero(n);
    e(j) = 1.0;
    basis.col(j) = lambda_point(weight, e).stacked();
    e(j) = kI;
    basis.col(n + j) = lambda_point(weight, e).stacked();
  }
  // rho = B c  =>  iota(rho) = B conj(c) = B conj(B)^{-1} conj(rho)
  return AntilinearInvolution(basis * basis.conjugate().inverse());
}

cd QuadraticPhase::operator()(const CVector& x, const CVector& y, const CVector& theta) const {
  return 0.5 * (x.transpose() * xx * x).value() + (x.transpose() * xy * y).value() +
         (x.transpose() * xtheta * theta).value() + 0.5 * (y.transpose() * yy * y).value() +
         (y.transpose() * ytheta * theta).value() + 0.5 * (theta.transpose() * thetatheta * theta).value();
}

CVector QuadraticPhase::dx(const CVector& x, const CVector& y, const CVector& theta) const {
  return xx * x + xy * y + xtheta * theta;
}

CVector QuadraticPhase::dy(const CVector& x, const CVector& y, const CVector& theta) const {
  return xy.transpose() * x + yy * y + ytheta * theta;
}

CVector QuadraticPhase::dtheta(const CVector& x, const CVector& y, const CVector& theta) const {
  return xtheta.transpose() * x + ytheta.transpose() * y + thetatheta * theta;
}

LinearCanonicalMap canonical_from_phase(const QuadraticPhase& phase) {
  const Index n = phase.dim();
  const Index m = phase.fiber_dim();
  // Unknowns (x, theta) from:  -F'_y = eta,  F'_theta = 0.
  CMatrix system(n + m, n + m);
  system << phase.xy.transpose(), phase.ytheta, phase.xtheta.transpose(), phase.thetatheta;
  CMatrix rhs = CMatrix::Zero(n + m, 2 * n);
  rhs.topLeftCorner(n, n) = -phase.yy;
  rhs.topRightCorner(n, n) = -CMatrix::Identity(n, n);
  rhs.bottomLeftCorner(m, n) = -phase.ytheta.transpose();

  const double rcond = inverse_condition(system);
  if (rcond < 1e-13) {
    std::ostringstream os;
    os << "critical system of the phase is singular (inverse condition " << rcond << ")";
    throw DegeneratePhaseError(os.str());
  }
  const CMatrix sol = system.fullPivLu().solve(rhs);
  const CMatrix x_of = sol.topRows(n);
  const CMatrix theta_of = sol.bottomRows(m);
  CMatrix y_of = CMatrix::Zero(n, 2 * n);
  y_of.leftCols(n) = CMatrix::Identity(n, n);

  CMatrix k(2 * n, 2 * n);
  k.topRows(n) = x_of;
  k.bottomRows(n) = phase.xx * x_of + phase.xy * y_of + phase.xtheta * theta_of;
  return LinearCanonicalMap(std::move(k));
}

namespace {

// Realifies rho -> rho^T W conj(rho) on C^2n; returns the complex symmetric
// 4n x 4n matrix whose real part is the form.
CMatrix realify_sesquilinear(const CMatrix& w) {
  const CMatrix t = complex_embedding(w.rows());
  CMatrix rc = t.transpose() * w * t.conjugate();
  return 0.5 * (rc + rc.transpose());
}

}  // namespace

RMatrix involution_base_form(const AntilinearInvolution& iota) {
  const CMatrix s = symplectic_matrix(iota.dim()) * iota.matrix();
  return realify_sesquilinear((1.0 / kI) * s).real();
}

PositivityCertificate positivity_certificate(const LinearCanonicalMap& k, const AntilinearInvolution& iota,
                                             double tol) {
  if (k.dim() != iota.dim()) throw DimensionError("certificate: map and involution dimensions differ");
  const CMatrix s = symplectic_matrix(k.dim()) * iota.matrix();
  const CMatrix& km = k.matrix();
  const CMatrix w = (1.0 / kI) * (km.transpose() * s * km.conjugate() - s);
  const CMatrix rc = realify_sesquilinear(w);

  PositivityCertificate cert;
  cert.pmat = rc.real();
  cert.imag_residue = rc.imag().cwiseAbs().maxCoeff();
  cert.symmetry_residue = symmetry_residual(cert.pmat);
  const double base_scale = spectral_norm(involution_base_form(iota));
  cert.spectrum = classify_positivity(cert.pmat, base_scale, tol);
  return cert;
}

}  // namespace metatoeplitz
