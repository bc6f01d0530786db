#include <iostream>

#include <CLI11.hpp>

#include "metatoeplitz/error.hpp"
#include "metatoeplitz_cli/commands.hpp"
#include "metatoeplitz_cli/grid.hpp"

using namespace metatoeplitz::cli;

int main(int argc, char** argv) {
  CLI::App app{"Boundedness and compactness of Toeplitz operators with quadratic exponential symbols"};
  app.require_subcommand(1);

  ClassifyOptions classify;
  auto* c = app.add_subcommand("classify", "Classify the operator described by a problem file");
  c->add_option("file", classify.path, "Problem file (JSON)")->required();
  c->add_flag("--timing", classify.timing, "Include wall-clock timing in the report");

  std::string re_spec, im_spec, a_spec, out_path = "-";
  unsigned jobs = 1;
  auto* s = app.add_subcommand("scan", "Phase diagram of the model family as CSV");
  s->add_option("--lambda-re", re_spec, "a:b:steps")->required();
  s->add_option("--lambda-im", im_spec, "v[,v...]")->required();
  s->add_option("--norm-a", a_spec, "a:b:steps")->required();
  s->add_option("-o,--output", out_path, "Output CSV path ('-' for stdout)");
  s->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));

  VerifyCliOptions verify;
  std::string suite;
  auto* v = app.add_subcommand("verify", "Run the cross-validation suites");
  v->add_option("--suite", suite, "Run a single suite");
  v->add_option("--seed", verify.seed, "Random seed");
  v->add_option("--n", verify.n, "Dimension")->check(CLI::IsMember({1, 2}));

  OracleOptions oracle;
  std::string sizes;
  auto* o = app.add_subcommand("oracle", "Brute-force numerical experiments (n <= 2)");
  o->add_option("file", oracle.path, "Problem file (JSON)")->required();
  o->add_option("--experiment", oracle.experiment, "Experiment")
      ->required()
      ->check(CLI::IsMember({"trend", "decay", "weyl", "coherent"}));
  o->add_option("-N", sizes, "Degree bounds, comma separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInadmissible;
  }

  try {
    if (*c) return run_classify(classify, std::cout, std::cerr);
    if (*s) {
      ScanOptions scan;
      scan.lambda_re = parse_range(re_spec, "--lambda-re");
      scan.lambda_im = parse_list(im_spec, "--lambda-im");
      scan.norm_a = parse_range(a_spec, "--norm-a");
      scan.jobs = jobs;
      return run_scan(scan, out_path, std::cout, std::cerr);
    }
    if (*v) {
      if (!suite.empty()) verify.suite = suite;
      return run_verify(verify, std::cout, std::cerr);
    }
    if (*o) {
      if (!sizes.empty()) oracle.sizes = parse_sizes(sizes, "-N");
      return run_oracle(oracle, std::cout, std::cerr);
    }
  } catch (const metatoeplitz::InvalidInputError& e) {
    std::cerr << e.what() << "\n";
    return kInadmissible;
  }
  return 0;
}
