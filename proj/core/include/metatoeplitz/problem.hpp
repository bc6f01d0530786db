#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "metatoeplitz/forms.hpp"

namespace metatoeplitz {

/// A Toeplitz operator Top(e^q) on H_Phi0 together with its admissibility.
class ToeplitzProblem {
 public:
  ToeplitzProblem(Weight weight, ComplexQuadraticForm symbol, Tolerances tol = Tolerances::from_environment());

  Index dim() const { return weight_.dim(); }
  const Weight& weight() const { return weight_; }
  const ComplexQuadraticForm& symbol() const { return symbol_; }
  const Tolerances& tolerances() const { return tol_; }
  const AdmissibilityReport& admissibility() const { return admissibility_; }
  bool admissible() const { return admissibility_.ok; }

  /// Throws InadmissibleError carrying the admissibility message.
  void require_admissible() const;

  /// Same symbol over the Hermitian part of the weight.
  ToeplitzProblem hermitian_reduction() const;

 private:
  Weight weight_;
  ComplexQuadraticForm symbol_;
  Tolerances tol_;
  AdmissibilityReport admissibility_;
};

enum class OperatorClass { Inadmissible, Unbounded, BoundedNotCompact, Compact };

/// Lower-case identifier used in reports and CSV output.
std::string_view to_string(OperatorClass c);
OperatorClass operator_class_from_string(std::string_view s);

/// One method's opinion on the operator.
struct Witness {
  std::string method;
  OperatorClass verdict = OperatorClass::Inadmissible;
  double margin = 0.0;  // signed; positive means "compact side"
  double scale = 1.0;
  bool decisive = false;  // margin outside the boundary band
  std::string note;
};

struct Verdict {
  OperatorClass verdict = OperatorClass::Inadmissible;
  double margin = 0.0;  // smallest eigenvalue of the positivity certificate
  double scale = 1.0;
  bool boundary = false;
  std::vector<Witness> witnesses;
};

}  // namespace metatoeplitz
