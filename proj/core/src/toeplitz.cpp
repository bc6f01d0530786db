#include "metatoeplitz/toeplitz.hpp"

#include <sstream>

#include "metatoeplitz/bergman.hpp"
#include "metatoeplitz/error.hpp"
#include "metatoeplitz/model.hpp"
#include "metatoeplitz/weyl.hpp"

namespace metatoeplitz {

QuadraticPhase build_phase(const ToeplitzProblem& problem) {
  problem.require_admissible();
  const Index n = problem.dim();
  const CMatrix& h = problem.weight().hermitian();
  const CMatrix& p = problem.weight().pluriharmonic();
  const auto& q = problem.symbol();
  const cd c = 2.0 / kI;
  const cd ci = 1.0 / kI;

  // Psi0(x, theta) = theta.Hx + 1/2 x.Px + 1/2 theta.conj(P) theta; the
  // theta-theta parts of the two Psi0 terms cancel.
  QuadraticPhase f;
  f.xx = c * p;
  f.xy = CMatrix::Zero(n, n);
  f.xtheta = c * h.transpose();
  f.yy = -c * p + ci * q.xx();
  f.ytheta = -c * h.transpose() + ci * q.xbarx().transpose();
  f.thetatheta = ci * q.xbarxbar();
  return f;
}

LinearCanonicalMap toeplitz_kappa(const ToeplitzProblem& problem) {
  return canonical_from_phase(build_phase(problem));
}

Factorization reduce_and_factor(const ToeplitzProblem& problem) {
  LinearCanonicalMap kappa = toeplitz_kappa(problem);
  LinearCanonicalMap kappa_herm = toeplitz_kappa(problem.hermitian_reduction());
  LinearCanonicalMap ka = kappa_A(split_herm_plh(problem.weight()).a_matrix);
  const CMatrix composed = ka.inverse().matrix() * kappa_herm.matrix() * ka.matrix();
  const double scale = std::max(1.0, kappa.matrix().cwiseAbs().maxCoeff());
  const double residual = (kappa.matrix() - composed).cwiseAbs().maxCoeff() / scale;
  return {std::move(kappa), std::move(kappa_herm), std::move(ka), residual};
}

namespace {

OperatorClass from_definiteness(Definiteness d) {
  switch (d) {
    case Definiteness::Definite:
      return OperatorClass::Compact;
    case Definiteness::Semidefinite:
      return OperatorClass::BoundedNotCompact;
    case Definiteness::Indefinite:
      return OperatorClass::Unbounded;
  }
  return OperatorClass::Unbounded;
}

Witness witness_from(std::string method, const DefinitenessReport& spec, double band) {
  Witness w;
  w.method = std::move(method);
  w.verdict = from_definiteness(spec.sign);
  w.margin = spec.min();
  w.scale = spec.scale;
  w.decisive = std::abs(spec.min()) > band * spec.scale;
  return w;
}

bool is_model_problem(const ToeplitzProblem& problem) {
  const Index n = problem.dim();
  const auto& w = problem.weight();
  const auto& q = problem.symbol();
  const CMatrix id = CMatrix::Identity(n, n);
  if (w.has_pluriharmonic_part()) return false;
  if ((w.hermitian() - 0.25 * id).cwiseAbs().maxCoeff() > 0.0) return false;
  if (q.xx().cwiseAbs().maxCoeff() > 0.0) return false;
  const cd lambda = q.xbarx()(0, 0);
  return (q.xbarx() - lambda * id).cwiseAbs().maxCoeff() == 0.0;
}

}  // namespace

Verdict classify_operator(const ToeplitzProblem& problem) {
  Verdict v;
  if (!problem.admissible()) {
    v.verdict = OperatorClass::Inadmissible;
    v.margin = problem.admissibility().positivity_margin;
    v.scale = problem.admissibility().positivity_scale;
    return v;
  }
  const Tolerances& tol = problem.tolerances();
  const ToeplitzProblem reduced = problem.hermitian_reduction();

  const auto cert =
      positivity_certificate(toeplitz_kappa(reduced), involution_for_weight(reduced.weight()), tol.classification);
  v.margin = cert.margin();
  v.scale = cert.spectrum.scale;
  v.boundary = std::abs(v.margin) <= tol.boundary * v.scale;
  v.verdict = v.boundary ? OperatorClass::BoundedNotCompact : from_definiteness(cert.classification());
  {
    Witness w = witness_from("certificate", cert.spectrum, tol.boundary);
    w.verdict = v.verdict;
    v.witnesses.push_back(w);
  }

  if (problem.weight().has_pluriharmonic_part()) {
    const auto full = positivity_certificate(toeplitz_kappa(problem), involution_for_weight(problem.weight()),
                                             tol.classification);
    v.witnesses.push_back(witness_from("certificate_unreduced", full.spectrum, tol.boundary));
  }

  try {
    const auto sym = classify_symbol(weyl_symbol(problem), tol.classification);
    v.witnesses.push_back(witness_from("weyl", sym.decay, tol.boundary));
  } catch (const ResolventSingularError& e) {
    Witness w;
    w.method = "weyl";
    w.note = e.what();
    v.witnesses.push_back(w);
  }

  try {
    const BergmanForm f = bergman_f(reduced);
    v.witnesses.push_back(
        witness_from("bergman", coherent_growth_spectrum(f, reduced.weight(), tol.classification), tol.boundary));
  } catch (const SingularSystemError& e) {
    Witness w;
    w.method = "bergman";
    w.note = e.what();
    v.witnesses.push_back(w);
  }

  if (is_model_problem(problem)) {
    const ModelInstance m(problem.symbol().xbarx()(0, 0), 0.5 * problem.symbol().xbarxbar());
    if (m.admissible()) {
      const Verdict mv = classify_model(m, tol.boundary);
      Witness w;
      w.method = "model";
      w.verdict = mv.verdict;
      w.margin = mv.margin;
      w.scale = mv.scale;
      w.decisive = !mv.boundary;
      v.witnesses.push_back(w);
    }
  }

  if (!v.boundary) {
    for (const auto& w : v.witnesses) {
      if (w.decisive && w.verdict != v.verdict) {
        std::ostringstream os;
        os << "witness '" << w.method << "' says " << to_string(w.verdict) << " (margin " << w.margin
           << ") but the certificate says " << to_string(v.verdict) << " (margin " << v.margin << ")";
        throw DisagreementError(os.str());
      }
    }
  }
  return v;
}

}  // namespace metatoeplitz
