#pragma once

#include <doctest.h>

#include <cmath>
#include <random>

#include "metatoeplitz/linalg.hpp"

namespace testing_support {

using metatoeplitz::cd;
using metatoeplitz::CMatrix;
using metatoeplitz::CVector;
using metatoeplitz::Index;

inline double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline CMatrix random_matrix(std::mt19937_64& rng, Index n, Index m) {
  std::normal_distribution<double> d;
  CMatrix out(n, m);
  for (Index j = 0; j < m; ++j)
    for (Index i = 0; i < n; ++i) out(i, j) = cd(d(rng), d(rng));
  return out;
}

inline CMatrix random_symmetric(std::mt19937_64& rng, Index n) {
  const CMatrix a = random_matrix(rng, n, n);
  return 0.5 * (a + a.transpose());
}

inline CMatrix random_hermitian_pd(std::mt19937_64& rng, Index n) {
  const CMatrix a = random_matrix(rng, n, n);
  CMatrix h = a.adjoint() * a / static_cast<double>(n) + 0.3 * CMatrix::Identity(n, n);
  return 0.5 * (h + h.adjoint());
}

inline CVector random_vector(std::mt19937_64& rng, Index n) { return random_matrix(rng, n, 1); }

/// q(x) by explicit sums, independent of the library's matrix expressions.
inline cd eval_form(const CMatrix& qxx, const CMatrix& qxbx, const CMatrix& qxbxb, const CVector& x) {
  cd s = 0.0;
  const Index n = x.size();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      s += 0.5 * x(i) * qxx(i, j) * x(j);
      s += std::conj(x(i)) * qxbx(i, j) * x(j);
      s += 0.5 * std::conj(x(i)) * qxbxb(i, j) * std::conj(x(j));
    }
  }
  return s;
}

}  // namespace testing_support
