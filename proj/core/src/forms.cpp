#include "metatoeplitz/forms.hpp"

#include <cmath>
#include <sstream>

#include "metatoeplitz/error.hpp"

namespace metatoeplitz {

namespace {

void require_square(const CMatrix& m, Index n, const char* name) {
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream os;
    os << name << " must be " << n << "x" << n << ", got " << m.rows() << "x" << m.cols();
    throw DimensionError(os.str());
  }
}

CMatrix symmetrized(const CMatrix& m, const char* name) {
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  if (symmetry_residual(m) > 1e-12 * scale) {
    throw InvalidInputError(std::string(name) + " must be symmetric");
  }
  return 0.5 * (m + m.transpose());
}

}  // namespace

ComplexQuadraticForm::ComplexQuadraticForm(CMatrix xx, CMatrix xbarx, CMatrix xbarxbar) {
  const Index n = xx.rows();
  require_square(xx, n, "Qxx");
  require_square(xbarx, n, "Qxbx");
  require_square(xbarxbar, n, "Qxbxb");
  xx_ = symmetrized(xx, "Qxx");
  xbarx_ = std::move(xbarx);
  xbarxbar_ = symmetrized(xbarxbar, "Qxbxb");
}

ComplexQuadraticForm ComplexQuadraticForm::zero(Index n) {
  return {CMatrix::Zero(n, n), CMatrix::Zero(n, n), CMatrix::Zero(n, n)};
}

cd ComplexQuadraticForm::operator()(const CVector& x) const {
  if (x.size() != dim()) throw DimensionError("quadratic form evaluated at a point of wrong dimension");
  const CVector xb = x.conjugate();
  return 0.5 * (x.transpose() * xx_ * x).value() + (xb.transpose() * xbarx_ * x).value() +
         0.5 * (xb.transpose() * xbarxbar_ * xb).value();
}

CMatrix ComplexQuadraticForm::hessian() const {
  const Index n = dim();
  CMatrix h(2 * n, 2 * n);
  h << xx_, xbarx_.transpose(), xbarx_, xbarxbar_;
  return h;
}

namespace {

// Complex symmetric 2n x 2n C with q(r) = r^T C r for real r.
CMatrix complexified_real_form(const ComplexQuadraticForm& q) {
  const Index n = q.dim();
  const CMatrix t = complex_embedding(n);
  CMatrix v(2 * n, 2 * n);
  v << t, t.conjugate();
  CMatrix c = 0.5 * v.transpose() * q.hessian() * v;
  return 0.5 * (c + c.transpose());
}

}  // namespace

RMatrix ComplexQuadraticForm::real_part_form() const { return complexified_real_form(*this).real(); }

RMatrix ComplexQuadraticForm::imag_part_form() const { return complexified_real_form(*this).imag(); }

bool ComplexQuadraticForm::is_real_valued(double tol) const {
  const double scale = 1.0 + std::max({xx_.cwiseAbs().maxCoeff(), xbarx_.cwiseAbs().maxCoeff(),
                                       xbarxbar_.cwiseAbs().maxCoeff()});
  const double a = (xbarxbar_ - xx_.conjugate()).cwiseAbs().maxCoeff();
  const double b = (xbarx_ - xbarx_.adjoint()).cwiseAbs().maxCoeff();
  return a <= tol * scale && b <= tol * scale;
}

ComplexQuadraticForm ComplexQuadraticForm::pulled_back(const CMatrix& s) const {
  if (s.rows() != dim()) throw DimensionError("pull-back matrix has wrong row count");
  const CMatrix sb = s.conjugate();
  return {s.transpose() * xx_ * s, sb.transpose() * xbarx_ * s, sb.transpose() * xbarxbar_ * sb};
}

ComplexQuadraticForm ComplexQuadraticForm::operator+(const ComplexQuadraticForm& other) const {
  if (other.dim() != dim()) throw DimensionError("adding quadratic forms of different dimension");
  return {xx_ + other.xx_, xbarx_ + other.xbarx_, xbarxbar_ + other.xbarxbar_};
}

ComplexQuadraticForm ComplexQuadraticForm::operator-(const ComplexQuadraticForm& other) const {
  return *this + other * cd(-1.0);
}

ComplexQuadraticForm ComplexQuadraticForm::operator*(cd factor) const {
  return {factor * xx_, factor * xbarx_, factor * xbarxbar_};
}

Weight::Weight(CMatrix hermitian, CMatrix pluriharmonic) {
  const Index n = hermitian.rows();
  require_square(hermitian, n, "Phi0 hermitian part");
  require_square(pluriharmonic, n, "Phi0 pluriharmonic part");
  const double scale = 1.0 + hermitian.cwiseAbs().maxCoeff();
  if ((hermitian - hermitian.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidInputError("Phi0 hermitian part must be Hermitian");
  }
  h_ = 0.5 * (hermitian + hermitian.adjoint());
  p_ = symmetrized(pluriharmonic, "Phi0 pluriharmonic part");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h_, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  min_levi_eigenvalue_ = ev(0);
  if (!(ev(0) > Tolerances{}.classification * std::max(1.0, ev(n - 1)))) {
    std::ostringstream os;
    os << "Phi0 is not strictly plurisubharmonic: smallest Levi eigenvalue " << ev(0);
    throw InvalidInputError(os.str());
  }
}

Weight::Weight(CMatrix hermitian) : Weight(hermitian, CMatrix::Zero(hermitian.rows(), hermitian.rows())) {}

Weight Weight::isotropic(Index n, double c) { return Weight(CMatrix::Identity(n, n) * c); }

double Weight::operator()(const CVector& x) const {
  if (x.size() != dim()) throw DimensionError("weight evaluated at a point of wrong dimension");
  const cd herm = x.dot(h_ * x);  // x^* H x
  const cd plh = (x.transpose() * p_ * x)(0, 0);
  return herm.real() + plh.real();
}

ComplexQuadraticForm Weight::as_form() const { return {p_, h_, p_.conjugate()}; }

cd HolomorphicQuadraticForm2n::operator()(const CVector& y, const CVector& theta) const {
  return 0.5 * (y.transpose() * yy * y)(0, 0) + (theta.transpose() * thetay * y)(0, 0) +
         0.5 * (theta.transpose() * thetatheta * theta)(0, 0);
}

CMatrix HolomorphicQuadraticForm2n::hessian() const {
  const Index n = dim();
  CMatrix h(2 * n, 2 * n);
  h << yy, thetay.transpose(), thetay, thetatheta;
  return h;
}

HolomorphicQuadraticForm2n polarize(const ComplexQuadraticForm& form) {
  return {form.xx(), form.xbarx(), form.xbarxbar()};
}

AdmissibilityReport check_admissible(const Weight& weight, const ComplexQuadraticForm& q, double tol) {
  if (weight.dim() != q.dim()) throw DimensionError("weight and symbol have different dimension");
  const Index n = q.dim();
  AdmissibilityReport r;

  const RMatrix herm = realify_hermitian(weight.hermitian());
  const RMatrix gap = herm - q.real_part_form();
  const auto spec = classify_positivity(gap, spectral_norm(herm), tol);
  r.positivity_margin = spec.min();
  r.positivity_scale = spec.scale;
  r.positivity_ok = spec.sign == Definiteness::Definite;

  const CMatrix levi = 2.0 * weight.hermitian() - q.xbarx();
  r.determinant_modulus = std::abs(levi.determinant());
  const double scale = std::max(spectral_norm(CMatrix(2.0 * weight.hermitian())), spectral_norm(levi));
  r.determinant_threshold = tol * std::pow(scale, static_cast<double>(n));
  r.determinant_ok = r.determinant_modulus > r.determinant_threshold;

  r.ok = r.positivity_ok && r.determinant_ok;
  std::ostringstream os;
  if (!r.positivity_ok) {
    os << "Re q < Phi_herm violated: Phi_herm - Re q has a nonpositive direction (smallest eigenvalue "
       << r.positivity_margin << ")";
  }
  if (!r.determinant_ok) {
    if (!r.positivity_ok) os << "; ";
    os << "det d_x d_xbar (2 Phi0 - q) vanishes (|det| = " << r.determinant_modulus << ")";
  }
  r.message = r.ok ? "admissible" : os.str();
  return r;
}

PluriharmonicSplit split_herm_plh(const Weight& weight) {
  return {Weight(weight.hermitian()), (2.0 / kI) * weight.pluriharmonic()};
}

bool check_polar_nondegenerate(const ComplexQuadraticForm& g, double tol) {
  const RMatrix re = g.real_part_form();
  const auto spec = classify_positivity(-re, 0.0, tol);
  if (spec.sign != Definiteness::Definite) {
    std::ostringstream os;
    os << "Re g is not negative definite (largest eigenvalue " << -spec.min() << ")";
    throw PreconditionError(os.str());
  }
  return inverse_condition(g.hessian()) > tol;
}

}  // namespace metatoeplitz
