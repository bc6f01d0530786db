#pragma once

#include <vector>

namespace metatoeplitz {

/// Gauss-Hermite rule for the weight exp(-t^2) on the real line.
struct GaussHermiteRule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // positive, summing to sqrt(pi)

  int order() const { return static_cast<int>(nodes.size()); }
};

/// Golub-Welsch nodes polished by Newton iteration on the orthonormal
/// Hermite recurrence, with weights from p'_n so that every weight carries
/// full relative precision (the tail weights from the eigenvectors alone are
/// only accurate in absolute terms). Results are cached per order.
const GaussHermiteRule& gauss_hermite(int order);

}  // namespace metatoeplitz
