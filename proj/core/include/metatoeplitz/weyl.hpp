#pragma once

#include "metatoeplitz/problem.hpp"

namespace metatoeplitz {

/// Weyl symbol a(x) = C exp(G(x, xbar)) of Top(e^q), parameterized by the
/// base point x of Lambda_Phi0.
///
/// Only |C| is meaningful; the phase of C depends on a branch choice of
/// det^{-1/2} and is kept for evaluation convenience only.
struct WeylSymbol {
  cd log_prefactor;
  ComplexQuadraticForm exponent;
  double reference_scale = 1.0;  // norm of the Levi form, for classification

  double prefactor_modulus() const { return std::exp(log_prefactor.real()); }
  cd operator()(const CVector& x) const { return std::exp(log_prefactor + exponent(x)); }
};

/// Closed form of exp(1/4 (Phi0''_{x xbar})^{-1} d_x . d_xbar) e^q as a
/// resolvent: with Q the (x, xbar) Hessian of q and Sigma the off-diagonal
/// block matrix built from H^{-1}/4,
///
///   G = Q (I - Sigma Q)^{-1},   |C| = |det(I - Q Sigma)|^{-1/2}.
///
/// Throws ResolventSingularError when I - Q Sigma is singular.
WeylSymbol weyl_symbol(const ToeplitzProblem& problem);

enum class SymbolClass { Unbounded, BoundedNotVanishing, VanishingAtInfinity };

std::string_view to_string(SymbolClass c);

struct SymbolClassification {
  SymbolClass cls = SymbolClass::Unbounded;
  DefinitenessReport decay;  // spectrum of -Re G
};

/// Sign of Re G on R^2n: negative definite vanishes at infinity, negative
/// semidefinite is bounded, anything else is unbounded.
SymbolClassification classify_symbol(const WeylSymbol& symbol, double tol = Tolerances{}.classification);

}  // namespace metatoeplitz
