#pragma once

#include "metatoeplitz/problem.hpp"
#include "metatoeplitz/symplectic.hpp"

namespace metatoeplitz {

/// F(x, y, theta) = (2/i)(Psi0(x, theta) - Psi0(y, theta)) + (1/i) Q(y, theta),
/// with Psi0 and Q the polarizations of Phi0 and q.
QuadraticPhase build_phase(const ToeplitzProblem& problem);

/// The canonical transformation of build_phase. Throws DegeneratePhaseError
/// if the critical system is numerically singular.
LinearCanonicalMap toeplitz_kappa(const ToeplitzProblem& problem);

struct Factorization {
  LinearCanonicalMap kappa;
  LinearCanonicalMap kappa_herm;
  LinearCanonicalMap kappa_a;
  /// max |K - K_A^{-1} K_herm K_A| / max(1, max |K|)
  double residual = 0.0;
};

/// Removes the pluriharmonic part of the weight: kappa = kappa_A^{-1} kappa_herm kappa_A.
Factorization reduce_and_factor(const ToeplitzProblem& problem);

/// Operator verdict from the positivity certificate of kappa_herm, with the
/// Weyl, Bergman and (when applicable) closed-form model verdicts attached
/// as witnesses. Throws DisagreementError when a decisive witness conflicts
/// with a decisive certificate.
Verdict classify_operator(const ToeplitzProblem& problem);

}  // namespace metatoeplitz
