#include "metatoeplitz/bergman.hpp"

#include <limits>
#include <sstream>

#include "metatoeplitz/error.hpp"

namespace metatoeplitz {

namespace {

void require_hermitian_weight(const ToeplitzProblem& problem) {
  problem.require_admissible();
  if (problem.weight().has_pluriharmonic_part()) {
    throw PreconditionError("Bergman form requires a weight without pluriharmonic part; reduce first");
  }
}

constexpr double kSingularThreshold = 1e-13;

}  // namespace

std::pair<CVector, CVector> CriticalSystem::solve(const CVector& x, const CVector& z) const {
  const Index n = hermitian.rows();
  CVector rhs(2 * n);
  rhs << 2.0 * hermitian * x, 2.0 * hermitian.transpose() * z;
  const CVector sol = amat.fullPivLu().solve(rhs);
  return {sol.head(n), sol.tail(n)};
}

CriticalSystem critical_system(const ToeplitzProblem& problem) {
  require_hermitian_weight(problem);
  const Index n = problem.dim();
  const CMatrix& h = problem.weight().hermitian();
  const auto& q = problem.symbol();

  // Q''_{theta y} = Qxbx, Q''_{y theta} = Qxbx^T, Q''_{yy} = Qxx, Q''_{theta theta} = Qxbxb
  CriticalSystem cs;
  cs.hermitian = h;
  cs.amat.resize(2 * n, 2 * n);
  cs.amat << 2.0 * h - q.xbarx(), -q.xbarxbar(), -q.xx(), 2.0 * h.transpose() - q.xbarx().transpose();

  cs.amat_inverse_condition = inverse_condition(cs.amat);
  cs.a11_inverse_condition = inverse_condition(cs.amat.topLeftCorner(n, n));
  if (cs.amat_inverse_condition < kSingularThreshold || cs.a11_inverse_condition < kSingularThreshold) {
    std::ostringstream os;
    os << "critical system singular (inverse conditions " << cs.amat_inverse_condition << ", "
       << cs.a11_inverse_condition << ")";
    throw SingularSystemError(os.str());
  }
  const CMatrix b = cs.amat.fullPivLu().inverse();
  cs.b22_inverse_condition = inverse_condition(b.bottomRightCorner(n, n));
  if (cs.b22_inverse_condition < kSingularThreshold) {
    throw SingularSystemError("lower-right block of the inverse critical matrix is singular");
  }
  return cs;
}

BergmanForm::BergmanForm(CMatrix fxx, CMatrix fxz, CMatrix fzz) {
  const Index n = fxx.rows();
  if (fxx.cols() != n || fxz.rows() != n || fxz.cols() != n || fzz.rows() != n || fzz.cols() != n) {
    throw DimensionError("Bergman form blocks must be n x n");
  }
  fxx_ = 0.5 * (fxx + fxx.transpose());
  fxz_ = std::move(fxz);
  fzz_ = 0.5 * (fzz + fzz.transpose());
  const double rc = inverse_condition(fxz_);
  if (rc < kSingularThreshold) {
    std::ostringstream os;
    os << "det f''_xz vanishes (inverse condition " << rc << ")";
    throw SingularSystemError(os.str());
  }
}

cd BergmanForm::operator()(const CVector& x, const CVector& z) const {
  return 0.5 * (x.transpose() * fxx_ * x).value() + (x.transpose() * fxz_ * z).value() +
         0.5 * (z.transpose() * fzz_ * z).value();
}

CVector BergmanForm::dx(const CVector& x, const CVector& z) const { return fxx_ * x + fxz_ * z; }

CVector BergmanForm::dz(const CVector& x, const CVector& z) const { return fxz_.transpose() * x + fzz_ * z; }

BergmanForm bergman_f(const ToeplitzProblem& problem) {
  const CriticalSystem cs = critical_system(problem);
  const Index n = problem.dim();
  const CMatrix& h = cs.hermitian;
  const auto& q = problem.symbol();

  // In w = (y, theta) the integrand is 1/2 w^T S w + b^T w with
  // b = Bm (x, z), so 2 f = -1/2 b^T S^{-1} b.
  CMatrix s(2 * n, 2 * n);
  s << q.xx(), q.xbarx().transpose() - 2.0 * h.transpose(), q.xbarx() - 2.0 * h, q.xbarxbar();
  CMatrix bm = CMatrix::Zero(2 * n, 2 * n);
  bm.topRightCorner(n, n) = 2.0 * h.transpose();
  bm.bottomLeftCorner(n, n) = 2.0 * h;
  CMatrix hess = -0.5 * bm.transpose() * s.fullPivLu().solve(bm);
  hess = 0.5 * (hess + hess.transpose());
  return BergmanForm(hess.topLeftCorner(n, n), hess.topRightCorner(n, n), hess.bottomRightCorner(n, n));
}

CMatrix bergman_fxz_via_schur(const ToeplitzProblem& problem) {
  const CriticalSystem cs = critical_system(problem);
  const Index n = problem.dim();
  const CMatrix b = cs.amat.fullPivLu().inverse();
  const CMatrix ht = cs.hermitian.transpose();
  // theta = B21 2H x + B22 2H^T z, so d_z theta = 2 B22 H^T.
  return ht * b.bottomRightCorner(n, n) * 2.0 * ht;
}

cd coherent_overlap(const Weight& weight, const CVector& w, const CVector& z) {
  if (weight.has_pluriharmonic_part()) {
    throw PreconditionError("coherent_overlap requires a weight without pluriharmonic part");
  }
  // Psi0(z, wbar) = wbar.H z
  const cd psi = (w.conjugate().transpose() * weight.hermitian() * z).value();
  return std::exp(2.0 * psi - weight(z) - weight(w));
}

namespace {

ComplexQuadraticForm weight_form_2n(const Weight& weight) {
  const Index n = weight.dim();
  CMatrix h2 = CMatrix::Zero(2 * n, 2 * n);
  h2.topLeftCorner(n, n) = weight.hermitian();
  h2.bottomRightCorner(n, n) = weight.hermitian();
  return ComplexQuadraticForm(CMatrix::Zero(2 * n, 2 * n), h2, CMatrix::Zero(2 * n, 2 * n));
}

// (x, w) -> f(x, wbar) as a complex quadratic form on C^2n.
ComplexQuadraticForm f_on_antidiagonal(const BergmanForm& f) {
  const Index n = f.dim();
  CMatrix xx = CMatrix::Zero(2 * n, 2 * n);
  CMatrix xbarx = CMatrix::Zero(2 * n, 2 * n);
  CMatrix xbarxbar = CMatrix::Zero(2 * n, 2 * n);
  xx.topLeftCorner(n, n) = f.fxx();
  xbarx.bottomLeftCorner(n, n) = f.fxz().transpose();  // wbar . fxz^T x
  xbarxbar.bottomRightCorner(n, n) = f.fzz();
  return {xx, xbarx, xbarxbar};
}

}  // namespace

double growth_exponent(const BergmanForm& f, const Weight& weight, const CVector& w, double tol) {
  if (weight.has_pluriharmonic_part()) {
    throw PreconditionError("growth_exponent requires a weight without pluriharmonic part");
  }
  const Index n = f.dim();
  if (w.size() != n) throw DimensionError("growth_exponent: w has wrong dimension");

  // Gate: x -> 2 Re f(x, 0) - Phi0(x) negative definite.
  const ComplexQuadraticForm fx0(f.fxx(), CMatrix::Zero(n, n), CMatrix::Zero(n, n));
  const RMatrix herm = realify_hermitian(weight.hermitian());
  const RMatrix gate = herm - 2.0 * fx0.real_part_form();
  const auto gate_spec = classify_positivity(gate, spectral_norm(herm), tol);
  if (gate_spec.sign != Definiteness::Definite) return std::numeric_limits<double>::infinity();

  // 4 Re f(x, wbar) - 2 Phi0(x) = -2 r^T gate r + 4 Re(x.fxz wbar) + 4 Re f(0, wbar)
  // and Re(x.c) = r . (Re c, -Im c) interleaved.
  const CVector c = f.fxz() * w.conjugate();
  RVector lin(2 * n);
  for (Index k = 0; k < n; ++k) {
    lin(2 * k) = 4.0 * c(k).real();
    lin(2 * k + 1) = -4.0 * c(k).imag();
  }
  const double constant = 4.0 * f(CVector::Zero(n), w.conjugate()).real() - 2.0 * weight(w);
  // max of -2 r^T G r + lin.r is lin^T G^{-1} lin / 8
  const RVector sol = gate.ldlt().solve(lin);
  return constant + lin.dot(sol) / 8.0;
}

RMatrix coherent_growth_form(const BergmanForm& f, const Weight& weight) {
  if (weight.has_pluriharmonic_part()) {
    throw PreconditionError("coherent_growth_form requires a weight without pluriharmonic part");
  }
  const ComplexQuadraticForm g = weight_form_2n(weight) - f_on_antidiagonal(f) * cd(2.0);
  return g.real_part_form();
}

DefinitenessReport coherent_growth_spectrum(const BergmanForm& f, const Weight& weight, double tol) {
  const RMatrix form = coherent_growth_form(f, weight);
  const double ref = spectral_norm(realify_hermitian(weight.hermitian()));
  return classify_positivity(form, ref, tol);
}

bool coherent_growth_criterion(const BergmanForm& f, const Weight& weight, Strictness strict, double tol) {
  const auto spec = coherent_growth_spectrum(f, weight, tol);
  if (strict == Strictness::Strict) return spec.sign == Definiteness::Definite;
  return spec.sign != Definiteness::Indefinite;
}

LinearCanonicalMap bergman_kappa(const BergmanForm& f, const Weight& weight) {
  const Index n = f.dim();
  const cd c = 2.0 / kI;
  // phi(x, y, z) = (2/i)(f(x, z) - z.Hy)
  QuadraticPhase phase;
  phase.xx = c * f.fxx();
  phase.xy = CMatrix::Zero(n, n);
  phase.xtheta = c * f.fxz();
  phase.yy = CMatrix::Zero(n, n);
  phase.ytheta = -c * weight.hermitian().transpose();
  phase.thetatheta = c * f.fzz();
  return canonical_from_phase(phase);
}

}  // namespace metatoeplitz
