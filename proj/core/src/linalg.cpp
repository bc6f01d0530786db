#include "metatoeplitz/linalg.hpp"

#include <cstdlib>
#include <string>

#include "metatoeplitz/error.hpp"

namespace metatoeplitz {

Tolerances Tolerances::from_environment() {
  Tolerances tol;
  if (const char* env = std::getenv("TOEPLITZ_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(value > 0.0) || value >= 1.0) {
      throw InvalidInputError("TOEPLITZ_TOL must be a number in (0, 1), got '" + std::string(env) + "'");
    }
    tol.classification = value;
  }
  return tol;
}

CMatrix complex_embedding(Index m) {
  CMatrix t = CMatrix::Zero(m, 2 * m);
  for (Index k = 0; k < m; ++k) {
    t(k, 2 * k) = 1.0;
    t(k, 2 * k + 1) = kI;
  }
  return t;
}

RVector to_real(const CVector& z) {
  RVector r(2 * z.size());
  for (Index k = 0; k < z.size(); ++k) {
    r(2 * k) = z(k).real();
    r(2 * k + 1) = z(k).imag();
  }
  return r;
}

CVector to_complex(const RVector& r) {
  CVector z(r.size() / 2);
  for (Index k = 0; k < z.size(); ++k) z(k) = cd(r(2 * k), r(2 * k + 1));
  return z;
}

RMatrix realify_hermitian(const CMatrix& herm) {
  const CMatrix t = complex_embedding(herm.rows());
  const CMatrix r = t.adjoint() * herm * t;
  RMatrix out = 0.5 * (r + r.transpose()).real();
  return out;
}

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::Definite:
      return "definite";
    case Definiteness::Semidefinite:
      return "semidefinite";
    case Definiteness::Indefinite:
      return "indefinite";
  }
  return "unknown";
}

DefinitenessReport classify_positivity(const RMatrix& form, double reference_scale, double tol) {
  DefinitenessReport report;
  const RMatrix sym = 0.5 * (form + form.transpose());
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(sym, Eigen::EigenvaluesOnly);
  report.eigenvalues = solver.eigenvalues();
  double norm = 0.0;
  if (report.eigenvalues.size() > 0) norm = report.eigenvalues.cwiseAbs().maxCoeff();
  report.scale = std::max(norm, reference_scale);
  const double band = tol * report.scale;
  if (report.min() > band) {
    report.sign = Definiteness::Definite;
  } else if (report.min() < -band) {
    report.sign = Definiteness::Indefinite;
  } else {
    report.sign = Definiteness::Semidefinite;
  }
  return report;
}

double symmetry_residual(const RMatrix& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.transpose()).cwiseAbs().maxCoeff();
}

double symmetry_residual(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.transpose()).cwiseAbs().maxCoeff();
}

double spectral_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

double spectral_norm(const RMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<RMatrix> svd(a);
  return svd.singularValues()(0);
}

CMatrix complex_symmetric_cholesky(const CMatrix& m) {
  const Index d = m.rows();
  CMatrix l = CMatrix::Zero(d, d);
  for (Index j = 0; j < d; ++j) {
    cd pivot = m(j, j);
    for (Index k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
    if (!(pivot.real() > 0.0)) {
      throw PreconditionError("complex symmetric Cholesky: pivot " + std::to_string(j) +
                              " has non-positive real part");
    }
    l(j, j) = std::sqrt(pivot);
    for (Index i = j + 1; i < d; ++i) {
      cd s = m(i, j);
      for (Index k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

double inverse_condition(const CMatrix& a) {
  if (a.size() == 0) return 1.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0) return 0.0;
  return s(s.size() - 1) / s(0);
}

}  // namespace metatoeplitz
