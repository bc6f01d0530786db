#include "metatoeplitz/oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "metatoeplitz/error.hpp"
#include "metatoeplitz/quadrature.hpp"

namespace metatoeplitz {

namespace {

constexpr Index kChunk = 4096;

void require_oracle_problem(const ToeplitzProblem& problem) {
  problem.require_admissible();
  if (problem.dim() > 2) throw PreconditionError("oracle is limited to n <= 2");
  if (problem.weight().has_pluriharmonic_part()) {
    throw PreconditionError("oracle requires a weight without pluriharmonic part");
  }
}

// x = S y with y = 2 R x, H = R^* R.
CMatrix weight_coordinates(const Weight& weight) {
  Eigen::LLT<CMatrix> llt(weight.hermitian());
  const CMatrix r = llt.matrixU();
  return (2.0 * r).inverse();
}

double log_norm_sq(const MultiIndex& alpha) {
  // |y^alpha|^2 = prod 2 pi 2^a a!
  double s = 0.0;
  for (int a : alpha) s += std::log(2.0 * std::numbers::pi) + a * std::log(2.0) + std::lgamma(a + 1.0);
  return s;
}

int total_degree(const MultiIndex& a) {
  int d = 0;
  for (int v : a) d += v;
  return d;
}

// Tensor index -> node in R^d.
void tensor_node(Index flat, int order, Index d, std::vector<int>& idx) {
  for (Index k = 0; k < d; ++k) {
    idx[k] = static_cast<int>(flat % order);
    flat /= order;
  }
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return 0.0;
  return (n * sxy - sx * sy) / denom;
}

}  // namespace

int default_quadrature_order(Index n, int degree_bound) {
  // The rotated integrand is polynomial, so order >= degree_bound is exact;
  // the margin only guards against rounding in the largest nodes.
  if (n == 1) return std::max(80, degree_bound + 8);
  return std::max(12, degree_bound + 4);
}

std::vector<MultiIndex> truncated_basis(Index n, int degree_bound) {
  if (n < 1 || n > 2) throw PreconditionError("truncated basis is implemented for n <= 2");
  if (degree_bound < 1) throw InvalidInputError("degree bound must be positive");
  std::vector<MultiIndex> basis;
  for (int d = 0; d < degree_bound; ++d) {
    if (n == 1) {
      basis.push_back({d});
    } else {
      for (int a = d; a >= 0; --a) basis.push_back({a, d - a});
    }
  }
  return basis;
}

CVector TruncatedOperator::eigenvalues() const {
  const Index m = size();
  bool diagonal = true;
  for (Index j = 0; j < m && diagonal; ++j) {
    for (Index k = 0; k < m; ++k) {
      if (j == k) continue;
      const double bound = 1e-12 * std::sqrt(std::abs(matrix(j, j)) * std::abs(matrix(k, k)));
      if (std::abs(matrix(j, k)) > bound) {
        diagonal = false;
        break;
      }
    }
  }
  if (diagonal) return matrix.diagonal();
  Eigen::ComplexEigenSolver<CMatrix> solver(matrix, false);
  return solver.eigenvalues();
}

RVector TruncatedOperator::singular_values() const {
  Eigen::JacobiSVD<CMatrix> svd(matrix);
  return svd.singularValues();
}

double TruncatedOperator::norm() const { return singular_values()(0); }

TruncatedOperator TruncatedOperator::leading(int smaller_bound) const {
  if (smaller_bound > degree_bound || smaller_bound < 1) throw InvalidInputError("leading: invalid degree bound");
  TruncatedOperator out;
  out.degree_bound = smaller_bound;
  out.quadrature_order = quadrature_order;
  for (const auto& a : basis) {
    if (total_degree(a) < smaller_bound) out.basis.push_back(a);
  }
  const Index m = static_cast<Index>(out.basis.size());
  out.matrix = matrix.topLeftCorner(m, m);
  return out;
}

TruncatedOperator truncated_matrix(const ToeplitzProblem& problem, int degree_bound, QuadratureSpec spec) {
  require_oracle_problem(problem);
  const Index n = problem.dim();
  const Index d = 2 * n;
  const int order = spec.order > 0 ? spec.order : default_quadrature_order(n, degree_bound);

  TruncatedOperator op;
  op.degree_bound = degree_bound;
  op.quadrature_order = order;
  op.basis = truncated_basis(n, degree_bound);
  const Index m = static_cast<Index>(op.basis.size());

  // In y-coordinates: exponent q~(r) - |r|^2/2 = -1/2 r^T Mc r.
  const ComplexQuadraticForm qy = problem.symbol().pulled_back(weight_coordinates(problem.weight()));
  const CMatrix c = qy.real_part_form().cast<cd>() + kI * qy.imag_part_form().cast<cd>();
  const CMatrix mc = CMatrix::Identity(d, d) - 2.0 * c;
  Eigen::SelfAdjointEigenSolver<RMatrix> re_check(mc.real());
  if (!(re_check.eigenvalues()(0) > 0.0)) {
    throw QuadratureDivergenceError("e^q is not integrable against the weight (Re of the exponent not negative)");
  }
  const CMatrix lc = complex_symmetric_cholesky(mc);
  const CMatrix map = lc.transpose().inverse();  // r = map * s
  const cd jac = std::pow(2.0, 0.5 * d) / lc.diagonal().prod();

  const auto& rule = gauss_hermite(order);
  Index total = 1;
  for (Index k = 0; k < d; ++k) total *= order;

  std::vector<double> lognorm(m);
  for (Index a = 0; a < m; ++a) lognorm[a] = log_norm_sq(op.basis[a]);

  op.matrix = CMatrix::Zero(m, m);
  std::vector<int> idx(d);
  const int maxdeg = degree_bound;
  std::vector<std::vector<cd>> ypow(n, std::vector<cd>(maxdeg)), ybpow(n, std::vector<cd>(maxdeg));
  for (Index start = 0; start < total; start += kChunk) {
    const Index len = std::min(kChunk, total - start);
    CMatrix hol(len, m);
    CMatrix antihol(len, m);
    for (Index p = 0; p < len; ++p) {
      tensor_node(start + p, order, d, idx);
      CVector s(d);
      double w = 1.0;
      for (Index k = 0; k < d; ++k) {
        s(k) = std::numbers::sqrt2 * rule.nodes[idx[k]];
        w *= rule.weights[idx[k]];
      }
      const CVector r = map * s;
      // Powers of y_k = r_{2k} + i r_{2k+1} and its polynomial conjugate.
      for (Index k = 0; k < n; ++k) {
        const cd y = r(2 * k) + kI * r(2 * k + 1);
        const cd yb = r(2 * k) - kI * r(2 * k + 1);
        ypow[k][0] = ybpow[k][0] = 1.0;
        for (int e = 1; e < maxdeg; ++e) {
          ypow[k][e] = ypow[k][e - 1] * y;
          ybpow[k][e] = ybpow[k][e - 1] * yb;
        }
      }
      for (Index a = 0; a < m; ++a) {
        cd h = w, ah = 1.0;
        for (Index k = 0; k < n; ++k) {
          h *= ypow[k][op.basis[a][k]];
          ah *= ybpow[k][op.basis[a][k]];
        }
        hol(p, a) = h;
        antihol(p, a) = ah;
      }
    }
    op.matrix.noalias() += antihol.transpose() * hol;
  }
  for (Index k = 0; k < m; ++k) {
    for (Index j = 0; j < m; ++j) op.matrix(k, j) *= jac * std::exp(-0.5 * (lognorm[k] + lognorm[j]));
  }
  if (!op.matrix.allFinite()) throw QuadratureDivergenceError("truncated matrix has non-finite entries");
  return op;
}

NormTrend norm_trend(const ToeplitzProblem& problem, std::vector<int> degree_bounds, QuadratureSpec spec) {
  if (degree_bounds.empty()) throw InvalidInputError("norm_trend needs at least one size");
  std::sort(degree_bounds.begin(), degree_bounds.end());
  const TruncatedOperator full = truncated_matrix(problem, degree_bounds.back(), spec);
  NormTrend trend;
  trend.degree_bounds = degree_bounds;
  for (int nb : degree_bounds) trend.norms.push_back(full.leading(nb).norm());
  if (trend.norms.size() >= 2) {
    const double a = trend.norms[trend.norms.size() - 2];
    const double b = trend.norms.back();
    trend.last_relative_increase = (b - a) / std::max(a, 1e-300);
  }
  trend.hint = trend.last_relative_increase < 1e-3 ? BoundednessHint::Plateau : BoundednessHint::Growing;
  return trend;
}

SingularDecay singular_decay(const ToeplitzProblem& problem, int degree_bound, QuadratureSpec spec) {
  const TruncatedOperator op = truncated_matrix(problem, degree_bound, spec);
  SingularDecay out;
  out.singular_values = op.singular_values();
  out.levels_used = std::max(2, degree_bound / 2);
  std::vector<double> xs, ys;
  for (Index k = 0; k < out.singular_values.size(); ++k) {
    const int level = total_degree(op.basis[k]);
    if (level >= out.levels_used) break;
    if (!(out.singular_values(k) > 0.0)) break;
    xs.push_back(level);
    ys.push_back(std::log(out.singular_values(k)));
  }
  out.ratio = xs.size() >= 2 ? std::exp(fit_slope(xs, ys)) : 1.0;
  return out;
}

cd numeric_weyl(const ToeplitzProblem& problem, const CVector& x, QuadratureSpec spec) {
  problem.require_admissible();
  const Index n = problem.dim();
  if (n > 2) throw PreconditionError("oracle is limited to n <= 2");
  if (x.size() != n) throw DimensionError("numeric_weyl: x has wrong dimension");
  const Index d = 2 * n;

  // 1/4 d_x^T H^{-1} d_xbar = 1/2 grad^T Sigma grad on R^2n.
  const CMatrix t = complex_embedding(n);
  const RMatrix sigma = (t.adjoint() * problem.weight().hermitian().inverse() * t).real() / 8.0;
  const RMatrix sigma_inv = sigma.inverse();
  const auto& q = problem.symbol();
  const CMatrix qc = 2.0 * (q.real_part_form().cast<cd>() + kI * q.imag_part_form().cast<cd>());
  const CMatrix mc = sigma_inv.cast<cd>() - qc;
  Eigen::SelfAdjointEigenSolver<RMatrix> re_check(mc.real());
  if (!(re_check.eigenvalues()(0) > 0.0)) {
    std::ostringstream os;
    os << "heat-flow convolution is not absolutely convergent (smallest eigenvalue "
       << re_check.eigenvalues()(0) << ")";
    throw NotAbsolutelyConvergentError(os.str());
  }
  // a(r0) = N * e^{1/2 r0^T Qc r0} * int exp(-1/2 s^T Mc s - (Qc r0)^T s) ds
  const CVector r0 = to_real(x).cast<cd>();
  const CMatrix lc = complex_symmetric_cholesky(mc);
  const CVector b = lc.triangularView<Eigen::Lower>().solve(qc * r0);  // s = L^{-T} sigma
  const int order = spec.order > 0 ? spec.order : 80;
  const auto& rule = gauss_hermite(order);
  // The rotated integrand factorizes over coordinates.
  // Accumulated in log space: e^{quad} and the integral can over- and underflow separately.
  cd log_integral = 0.0;
  for (Index k = 0; k < d; ++k) {
    cd sum = 0.0;
    double magnitude = 0.0;
    for (int j = 0; j < order; ++j) {
      const cd term = rule.weights[j] * std::exp(-b(k) * std::numbers::sqrt2 * rule.nodes[j]);
      sum += term;
      magnitude += std::abs(term);
    }
    if (!std::isfinite(magnitude) || !(magnitude < 1e6 * std::abs(sum))) {
      std::ostringstream os;
      os << "Gauss-Hermite sum for the heat-flow convolution is unresolved (shift " << std::abs(b(k)) << ")";
      throw QuadratureDivergenceError(os.str());
    }
    log_integral += std::log(std::numbers::sqrt2 * sum);
  }
  const double normalization = std::pow(2.0 * std::numbers::pi, -0.5 * d) / std::sqrt(sigma.determinant());
  const cd quad = (0.5 * r0.transpose() * qc * r0).value();
  return normalization * std::exp(quad + log_integral) / lc.diagonal().prod();
}

CVector coherent_coefficients(const Weight& weight, const CVector& w, const std::vector<MultiIndex>& basis) {
  if (weight.has_pluriharmonic_part()) throw PreconditionError("coherent states need a Hermitian weight");
  const Index n = weight.dim();
  if (w.size() != n) throw DimensionError("coherent_coefficients: w has wrong dimension");
  Eigen::LLT<CMatrix> llt(weight.hermitian());
  const CVector yw = 2.0 * CMatrix(llt.matrixU()) * w;
  const double base = -0.25 * yw.squaredNorm();
  CVector c(static_cast<Index>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    cd v = 1.0;
    double lognorm = base;
    for (Index k = 0; k < n; ++k) {
      const int e = basis[a][k];
      v *= std::pow(std::conj(yw(k)), e);
      lognorm -= 0.5 * (e * std::log(2.0) + std::lgamma(e + 1.0));
    }
    c(static_cast<Index>(a)) = v * std::exp(lognorm);
  }
  return c;
}

double numeric_coherent_norm(const ToeplitzProblem& problem, const CVector& w, int degree_bound,
                             QuadratureSpec spec) {
  if (degree_bound <= 0) degree_bound = problem.dim() == 1 ? 80 : 16;
  const TruncatedOperator op = truncated_matrix(problem, degree_bound, spec);
  return (op.matrix * coherent_coefficients(problem.weight(), w, op.basis)).norm();
}

CoherentSlope coherent_log_norm_slope(const ToeplitzProblem& problem, const CVector& direction,
                                      const std::vector<double>& radii, int degree_bound, QuadratureSpec spec) {
  if (degree_bound <= 0) degree_bound = problem.dim() == 1 ? 80 : 16;
  const TruncatedOperator op = truncated_matrix(problem, degree_bound, spec);
  const CVector& u = direction;
  CoherentSlope out;
  out.radii = radii;
  std::vector<double> t2;
  for (double t : radii) {
    const CVector c = coherent_coefficients(problem.weight(), t * u, op.basis);
    out.log_norms.push_back(std::log((op.matrix * c).norm()));
    t2.push_back(t * t);
  }
  out.slope = fit_slope(t2, out.log_norms);
  return out;
}

cd numeric_coherent_overlap(const Weight& weight, const CVector& w, const CVector& z, int degree_bound) {
  const auto basis = truncated_basis(weight.dim(), degree_bound);
  const CVector cw = coherent_coefficients(weight, w, basis);
  const CVector cz = coherent_coefficients(weight, z, basis);
  // (k_w, k_z) = sum <k_w, e_a> conj(<k_z, e_a>)
  return (cw.transpose() * cz.conjugate()).value();
}

}  // namespace metatoeplitz
