#include "metatoeplitz/problem.hpp"

#include "metatoeplitz/error.hpp"

namespace metatoeplitz {

ToeplitzProblem::ToeplitzProblem(Weight weight, ComplexQuadraticForm symbol, Tolerances tol)
    : weight_(std::move(weight)), symbol_(std::move(symbol)), tol_(tol) {
  if (weight_.dim() != symbol_.dim()) throw DimensionError("weight and symbol have different dimension");
  admissibility_ = check_admissible(weight_, symbol_, tol_.classification);
}

void ToeplitzProblem::require_admissible() const {
  if (!admissibility_.ok) throw InadmissibleError(admissibility_.message);
}

ToeplitzProblem ToeplitzProblem::hermitian_reduction() const {
  return ToeplitzProblem(Weight(weight_.hermitian()), symbol_, tol_);
}

std::string_view to_string(OperatorClass c) {
  switch (c) {
    case OperatorClass::Inadmissible:
      return "inadmissible";
    case OperatorClass::Unbounded:
      return "unbounded";
    case OperatorClass::BoundedNotCompact:
      return "bounded_not_compact";
    case OperatorClass::Compact:
      return "compact";
  }
  return "unknown";
}

OperatorClass operator_class_from_string(std::string_view s) {
  for (auto c : {OperatorClass::Inadmissible, OperatorClass::Unbounded, OperatorClass::BoundedNotCompact,
                 OperatorClass::Compact}) {
    if (to_string(c) == s) return c;
  }
  throw ParseError("unknown verdict '" + std::string(s) + "'");
}

}  // namespace metatoeplitz
