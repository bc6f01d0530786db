#include "metatoeplitz/weyl.hpp"

#include <sstream>

#include "metatoeplitz/error.hpp"

namespace metatoeplitz {

WeylSymbol weyl_symbol(const ToeplitzProblem& problem) {
  problem.require_admissible();
  const Index n = problem.dim();
  const CMatrix& h = problem.weight().hermitian();
  const CMatrix q = problem.symbol().hessian();

  // 1/4 d_x^T H^{-1} d_xbar = 1/2 d_v^T Sigma d_v with v = (x, xbar).
  const CMatrix hinv = 0.25 * h.inverse();
  CMatrix sigma = CMatrix::Zero(2 * n, 2 * n);
  sigma.topRightCorner(n, n) = hinv;
  sigma.bottomLeftCorner(n, n) = hinv.transpose();

  const CMatrix id = CMatrix::Identity(2 * n, 2 * n);
  const CMatrix resolvent = id - sigma * q;
  const double rcond = inverse_condition(resolvent);
  if (rcond < 1e-13) {
    std::ostringstream os;
    os << "heat-flow resolvent det(I - Q Sigma) is singular (inverse condition " << rcond << ")";
    throw ResolventSingularError(os.str());
  }
  CMatrix g = q * resolvent.fullPivLu().inverse();
  g = 0.5 * (g + g.transpose());

  const cd det = (id - q * sigma).determinant();
  WeylSymbol w{-0.5 * std::log(det),
               ComplexQuadraticForm(g.topLeftCorner(n, n), g.bottomLeftCorner(n, n), g.bottomRightCorner(n, n)),
               spectral_norm(realify_hermitian(h))};
  return w;
}

std::string_view to_string(SymbolClass c) {
  switch (c) {
    case SymbolClass::Unbounded:
      return "unbounded";
    case SymbolClass::BoundedNotVanishing:
      return "bounded_not_vanishing";
    case SymbolClass::VanishingAtInfinity:
      return "vanishing_at_infinity";
  }
  return "unknown";
}

SymbolClassification classify_symbol(const WeylSymbol& symbol, double tol) {
  SymbolClassification out;
  out.decay = classify_positivity(-symbol.exponent.real_part_form(), symbol.reference_scale, tol);
  switch (out.decay.sign) {
    case Definiteness::Definite:
      out.cls = SymbolClass::VanishingAtInfinity;
      break;
    case Definiteness::Semidefinite:
      out.cls = SymbolClass::BoundedNotVanishing;
      break;
    case Definiteness::Indefinite:
      out.cls = SymbolClass::Unbounded;
      break;
  }
  return out;
}

}  // namespace metatoeplitz
