#include <doctest.h>

#include <sstream>

#include "metatoeplitz/error.hpp"
#include "metatoeplitz_cli/commands.hpp"
#include "metatoeplitz_cli/grid.hpp"

using namespace metatoeplitz;
using namespace metatoeplitz::cli;

namespace {

std::string problem(const char* name) { return std::string(METATOEPLITZ_PROBLEMS_DIR) + "/" + name; }

int classify(const char* name, std::string& out, std::string& err) {
  std::ostringstream o, e;
  const int code = run_classify({problem(name), false}, o, e);
  out = o.str();
  err = e.str();
  return code;
}

}  // namespace

TEST_CASE("classify exit codes and verdicts") {
  std::string out, err;
  CHECK(classify("model_compact.json", out, err) == kOk);
  CHECK(out.find("\"verdict\": \"compact\"") != std::string::npos);
  CHECK(classify("zero_symbol.json", out, err) == kOk);
  CHECK(out.find("\"verdict\": \"bounded_not_compact\"") != std::string::npos);
  CHECK(classify("model_unbounded.json", out, err) == kOk);
  CHECK(out.find("\"verdict\": \"unbounded\"") != std::string::npos);
  CHECK(classify("weight_with_pluriharmonic.json", out, err) == kOk);
  CHECK(classify("model_inadmissible.json", out, err) == kInadmissible);
  CHECK(err.find("Re q < Phi_herm violated") != std::string::npos);
  CHECK(classify("does_not_exist.json", out, err) == kInadmissible);
  CHECK(err.find("parse error") != std::string::npos);
}

TEST_CASE("grid specifications") {
  const auto r = parse_range("-2:0.24:101", "--lambda-re");
  CHECK(r.size() == 101);
  CHECK(r.front() == -2.0);
  CHECK(r.back() == 0.24);
  CHECK(parse_range("0:0:1", "x") == std::vector<double>{0.0});
  CHECK(parse_list("0,0.5,1", "x") == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(parse_sizes("10,20", "-N") == std::vector<int>{10, 20});
  CHECK_THROWS_AS(parse_range("0:1", "x"), InvalidInputError);
  CHECK_THROWS_AS(parse_range("1:0:5", "x"), InvalidInputError);
  CHECK_THROWS_AS(parse_range("0:1:1", "x"), InvalidInputError);
  CHECK_THROWS_AS(parse_range("0:1:0", "x"), InvalidInputError);
  CHECK_THROWS_AS(parse_range("0:nan:3", "x"), InvalidInputError);
  CHECK_THROWS_AS(parse_list("0,0.5,0", "x"), InvalidInputError);
  CHECK_THROWS_AS(parse_sizes("20,10", "-N"), InvalidInputError);
}

TEST_CASE("scan is deterministic and parallel-invariant") {
  ScanOptions opts;
  opts.lambda_re = parse_range("-2:0.24:101", "re");
  opts.lambda_im = {0.0, 0.5, 1.0};
  opts.norm_a = parse_range("0:0.2:5", "a");
  const std::string serial = format_scan_csv(scan_rows(opts));
  opts.jobs = 4;
  const std::string parallel = format_scan_csv(scan_rows(opts));
  CHECK(serial == parallel);
  CHECK(serial.rfind("re_lambda,im_lambda,normA,verdict,margin\n", 0) == 0);
  CHECK(std::count(serial.begin(), serial.end(), '\n') == 1 + 101 * 3 * 5);

  ScanOptions single;
  single.lambda_re = {0.0};
  single.lambda_im = {0.0};
  single.norm_a = {0.0};
  const auto rows = scan_rows(single);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].verdict == "bounded_not_compact");
  CHECK(rows[0].margin == 0.0);

  ScanOptions imaginary;
  imaginary.lambda_re = {0.0};
  imaginary.lambda_im = {1.0};
  imaginary.norm_a = parse_range("0:0.24:7", "a");
  for (const auto& row : scan_rows(imaginary)) CHECK(row.verdict == "compact");
}

TEST_CASE("verify subcommand") {
  std::ostringstream out, err;
  CHECK(run_verify({std::string("mehler"), 0, 1}, out, err) == kOk);
  const std::string text = out.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 1);
  CHECK(text.rfind("mehler", 0) == 0);
  std::ostringstream out2, err2;
  CHECK(run_verify({std::string("nope"), 0, 1}, out2, err2) == kVerifyFailed);
}

TEST_CASE("oracle subcommand") {
  for (const char* experiment : {"trend", "decay", "weyl", "coherent"}) {
    std::ostringstream out, err;
    CHECK(run_oracle({problem("model_compact.json"), experiment, {}}, out, err) == kOk);
    CHECK(out.str().find(experiment) != std::string::npos);
  }
  std::ostringstream out, err;
  CHECK(run_oracle({problem("model_inadmissible.json"), "trend", {}}, out, err) == kInadmissible);
  CHECK(run_oracle({problem("model_compact.json"), "bogus", {}}, out, err) == kInadmissible);
}
