#include "metatoeplitz/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "metatoeplitz/error.hpp"
#include "metatoeplitz/linalg.hpp"

namespace metatoeplitz {

namespace {

// Orthonormal Hermite values p_{n}(x), p_{n-1}(x) for the weight exp(-x^2).
std::pair<double, double> hermite_pair(int n, double x) {
  double p1 = std::pow(std::numbers::pi, -0.25);
  double p2 = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = x * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
  }
  return {p1, p2};
}

GaussHermiteRule build_rule(int order) {
  if (order < 1 || order > 400) throw InvalidInputError("Gauss-Hermite order must be in [1, 400]");
  const int n = order;
  GaussHermiteRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  // Golub-Welsch nodes as starting points; Newton then restores full
  // relative accuracy of the nodes and, through p'_n, of the weights.
  RVector guesses = RVector::Zero(n);
  if (n > 1) {
    RVector diag = RVector::Zero(n), off(n - 1);
    for (int j = 1; j < n; ++j) off(j - 1) = std::sqrt(0.5 * j);
    Eigen::SelfAdjointEigenSolver<RMatrix> tri;
    tri.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    guesses = tri.eigenvalues();
  }
  for (int i = 0; i < m; ++i) {
    double z = guesses(n - 1 - i);
    double pp = 0.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      const auto [p1, p2] = hermite_pair(n, z);
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) {
        converged = true;
        break;
      }
    }
    if (!converged) throw Error("Gauss-Hermite Newton iteration did not converge");
    const auto [p1, p2] = hermite_pair(n, z);
    (void)p1;
    pp = std::sqrt(2.0 * n) * p2;
    const double w = 2.0 / (pp * pp);
    rule.nodes[n - 1 - i] = z;
    rule.nodes[i] = -z;
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussHermiteRule& gauss_hermite(int order) {
  static std::mutex mutex;
  static std::map<int, GaussHermiteRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
  return it->second;
}

}  // namespace metatoeplitz
