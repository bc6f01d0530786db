#include "metatoeplitz/io.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "metatoeplitz/bergman.hpp"
#include "metatoeplitz/error.hpp"
#include "metatoeplitz/toeplitz.hpp"
#include "metatoeplitz/weyl.hpp"

namespace metatoeplitz {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError(field + ": " + what);
}

double real_from(const json& j, const std::string& field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  fail(field, "expected a number");
}

json real_to(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

cd complex_from(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) fail(field, "expected an [re, im] pair");
  return {real_from(j[0], field + "[0]"), real_from(j[1], field + "[1]")};
}

json complex_to(cd z) { return json::array({real_to(z.real()), real_to(z.imag())}); }

CMatrix matrix_from(const json& j, const std::string& field, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) {
    fail(field, "expected " + std::to_string(rows) + " rows");
  }
  CMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const std::string rf = field + "[" + std::to_string(r) + "]";
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      fail(rf, "expected " + std::to_string(cols) + " entries");
    }
    for (Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from(row[static_cast<std::size_t>(c)], rf + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

// Shape-free variant for reports.
CMatrix matrix_from(const json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of rows");
  const Index rows = static_cast<Index>(j.size());
  const Index cols = rows == 0 ? 0 : (j[0].is_array() ? static_cast<Index>(j[0].size()) : -1);
  if (cols < 0) fail(field, "expected an array of rows");
  return matrix_from(j, field, rows, cols);
}

json matrix_to(const CMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix optional_matrix(const json& parent, const char* key, const std::string& field, Index n) {
  if (!parent.contains(key) || parent[key].is_null()) return CMatrix::Zero(n, n);
  return matrix_from(parent[key], field, n, n);
}

json blocks_to(const FormBlocks& b) {
  return json{{"xx", matrix_to(b[0])}, {"xbarx", matrix_to(b[1])}, {"xbarxbar", matrix_to(b[2])}};
}

FormBlocks blocks_from(const json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  FormBlocks b;
  const char* keys[] = {"xx", "xbarx", "xbarxbar"};
  for (int i = 0; i < 3; ++i) {
    if (!j.contains(keys[i])) fail(field + "." + keys[i], "missing");
    b[i] = matrix_from(j[keys[i]], field + "." + keys[i]);
  }
  return b;
}

const json& require(const json& j, const char* key, const std::string& field) {
  if (!j.is_object() || !j.contains(key)) fail(field, "missing");
  return j[key];
}

bool same_matrix(const CMatrix& a, const CMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.size() == 0 || a == b);
}

bool same_real(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

}  // namespace

ToeplitzProblem parse_problem(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("<document>", e.what());
  }
  if (!root.is_object()) fail("<document>", "expected an object");

  const json& nj = require(root, "n", "n");
  if (!nj.is_number_integer() || nj.get<long long>() < 1) fail("n", "expected a positive integer");
  const Index n = nj.get<Index>();

  const json& phi = require(root, "Phi0", "Phi0");
  const CMatrix h = matrix_from(require(phi, "hermitian", "Phi0.hermitian"), "Phi0.hermitian", n, n);
  const CMatrix p = optional_matrix(phi, "pluriharmonic", "Phi0.pluriharmonic", n);

  CMatrix qxx = CMatrix::Zero(n, n), qxbx = CMatrix::Zero(n, n), qxbxb = CMatrix::Zero(n, n);
  if (root.contains("q")) {
    const json& q = root["q"];
    if (!q.is_object()) fail("q", "expected an object");
    qxx = optional_matrix(q, "xx", "q.xx", n);
    qxbx = optional_matrix(q, "xbarx", "q.xbarx", n);
    qxbxb = optional_matrix(q, "xbarxbar", "q.xbarxbar", n);
  }

  Tolerances tol = Tolerances::from_environment();
  if (root.contains("tolerances")) {
    const json& t = root["tolerances"];
    if (!t.is_object()) fail("tolerances", "expected an object");
    if (t.contains("classification")) {
      tol.classification = real_from(t["classification"], "tolerances.classification");
    }
    if (t.contains("boundary")) tol.boundary = real_from(t["boundary"], "tolerances.boundary");
    if (!(tol.classification > 0.0)) fail("tolerances.classification", "must be positive");
    if (!(tol.boundary > 0.0)) fail("tolerances.boundary", "must be positive");
  }

  std::optional<Weight> weight;
  try {
    weight.emplace(h, p);
  } catch (const InvalidInputError& e) {
    fail("Phi0", e.what());
  }
  std::optional<ComplexQuadraticForm> q;
  try {
    q.emplace(qxx, qxbx, qxbxb);
  } catch (const InvalidInputError& e) {
    fail("q", e.what());
  }
  return ToeplitzProblem(*weight, *q, tol);
}

ToeplitzProblem read_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string problem_to_json(const ToeplitzProblem& problem) {
  const auto& q = problem.symbol();
  json j{
      {"n", problem.dim()},
      {"Phi0",
       {{"hermitian", matrix_to(problem.weight().hermitian())},
        {"pluriharmonic", matrix_to(problem.weight().pluriharmonic())}}},
      {"q", {{"xx", matrix_to(q.xx())}, {"xbarx", matrix_to(q.xbarx())}, {"xbarxbar", matrix_to(q.xbarxbar())}}},
      {"tolerances",
       {{"classification", problem.tolerances().classification}, {"boundary", problem.tolerances().boundary}}},
  };
  return j.dump(2) + "\n";
}

bool operator==(const MethodReport& a, const MethodReport& b) {
  return a.method == b.method && a.verdict == b.verdict && same_real(a.margin, b.margin) &&
         same_real(a.scale, b.scale) && a.decisive == b.decisive && a.note == b.note;
}

bool operator==(const Report& a, const Report& b) {
  auto same_blocks = [](const std::optional<FormBlocks>& x, const std::optional<FormBlocks>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    for (int i = 0; i < 3; ++i) {
      if (!same_matrix((*x)[i], (*y)[i])) return false;
    }
    return true;
  };
  return a.verdict == b.verdict && same_real(a.margin, b.margin) && same_real(a.scale, b.scale) &&
         a.boundary == b.boundary && a.admissibility == b.admissibility && a.methods == b.methods &&
         same_matrix(a.kappa, b.kappa) && a.weyl_log_prefactor == b.weyl_log_prefactor &&
         same_blocks(a.weyl_exponent, b.weyl_exponent) && same_blocks(a.bergman_f, b.bergman_f) &&
         a.timing_seconds == b.timing_seconds;
}

Report make_report(const ToeplitzProblem& problem, bool with_timing) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.admissibility = problem.admissibility().message;
  const Verdict v = classify_operator(problem);
  r.verdict = std::string(to_string(v.verdict));
  r.margin = v.margin;
  r.scale = v.scale;
  r.boundary = v.boundary;
  for (const auto& w : v.witnesses) {
    r.methods.push_back({w.method, std::string(to_string(w.verdict)), w.margin, w.scale, w.decisive, w.note});
  }
  if (problem.admissible()) {
    r.kappa = toeplitz_kappa(problem).matrix();
    const ToeplitzProblem reduced = problem.hermitian_reduction();
    try {
      const WeylSymbol a = weyl_symbol(reduced);
      r.weyl_log_prefactor = a.log_prefactor;
      r.weyl_exponent = FormBlocks{a.exponent.xx(), a.exponent.xbarx(), a.exponent.xbarxbar()};
    } catch (const ResolventSingularError&) {
    }
    try {
      const BergmanForm f = bergman_f(reduced);
      r.bergman_f = FormBlocks{f.fxx(), f.fxz(), f.fzz()};
    } catch (const SingularSystemError&) {
    }
  }
  if (with_timing) {
    r.timing_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

std::string report_to_json(const Report& r) {
  json methods = json::array();
  for (const auto& m : r.methods) {
    methods.push_back({{"method", m.method},
                       {"verdict", m.verdict},
                       {"margin", real_to(m.margin)},
                       {"scale", real_to(m.scale)},
                       {"decisive", m.decisive},
                       {"note", m.note}});
  }
  json j{
      {"verdict", r.verdict},     {"margin", real_to(r.margin)},   {"scale", real_to(r.scale)},
      {"boundary", r.boundary},   {"admissibility", r.admissibility}, {"methods", methods},
      {"kappa", matrix_to(r.kappa)},
  };
  if (r.weyl_log_prefactor) j["weyl_log_prefactor"] = complex_to(*r.weyl_log_prefactor);
  if (r.weyl_exponent) j["weyl_exponent"] = blocks_to(*r.weyl_exponent);
  // f blocks reuse the form layout: xx, xbarx <- fxz, xbarxbar <- fzz.
  if (r.bergman_f) {
    const auto& b = *r.bergman_f;
    j["bergman_f"] = json{{"fxx", matrix_to(b[0])}, {"fxz", matrix_to(b[1])}, {"fzz", matrix_to(b[2])}};
  }
  if (r.timing_seconds) j["timing_seconds"] = real_to(*r.timing_seconds);
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("<document>", e.what());
  }
  Report r;
  auto str = [&](const char* key) {
    const json& v = require(j, key, key);
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
  };
  auto boolean = [](const json& v, const std::string& field) {
    if (!v.is_boolean()) fail(field, "expected a boolean");
    return v.get<bool>();
  };
  r.verdict = str("verdict");
  r.margin = real_from(require(j, "margin", "margin"), "margin");
  r.scale = real_from(require(j, "scale", "scale"), "scale");
  r.boundary = boolean(require(j, "boundary", "boundary"), "boundary");
  r.admissibility = str("admissibility");
  const json& methods = require(j, "methods", "methods");
  if (!methods.is_array()) fail("methods", "expected an array");
  for (std::size_t i = 0; i < methods.size(); ++i) {
    const std::string f = "methods[" + std::to_string(i) + "]";
    const json& m = methods[i];
    MethodReport mr;
    const json& method = require(m, "method", f + ".method");
    const json& verdict = require(m, "verdict", f + ".verdict");
    const json& note = require(m, "note", f + ".note");
    if (!method.is_string() || !verdict.is_string() || !note.is_string()) fail(f, "expected strings");
    mr.method = method.get<std::string>();
    mr.verdict = verdict.get<std::string>();
    mr.note = note.get<std::string>();
    mr.margin = real_from(require(m, "margin", f + ".margin"), f + ".margin");
    mr.scale = real_from(require(m, "scale", f + ".scale"), f + ".scale");
    mr.decisive = boolean(require(m, "decisive", f + ".decisive"), f + ".decisive");
    r.methods.push_back(std::move(mr));
  }
  r.kappa = matrix_from(require(j, "kappa", "kappa"), "kappa");
  if (j.contains("weyl_log_prefactor")) r.weyl_log_prefactor = complex_from(j["weyl_log_prefactor"], "weyl_log_prefactor");
  if (j.contains("weyl_exponent")) r.weyl_exponent = blocks_from(j["weyl_exponent"], "weyl_exponent");
  if (j.contains("bergman_f")) {
    const json& b = j["bergman_f"];
    r.bergman_f = FormBlocks{matrix_from(require(b, "fxx", "bergman_f.fxx"), "bergman_f.fxx"),
                             matrix_from(require(b, "fxz", "bergman_f.fxz"), "bergman_f.fxz"),
                             matrix_from(require(b, "fzz", "bergman_f.fzz"), "bergman_f.fzz")};
  }
  if (j.contains("timing_seconds")) r.timing_seconds = real_from(j["timing_seconds"], "timing_seconds");
  return r;
}

}  // namespace metatoeplitz
