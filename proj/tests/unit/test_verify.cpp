#include "support.hpp"

#include "metatoeplitz/error.hpp"
#include "metatoeplitz/random_instances.hpp"
#include "metatoeplitz/verify.hpp"

using namespace metatoeplitz;
using namespace testing_support;

TEST_CASE("instance generator is deterministic and admissible") {
  InstanceGenerator a(5), b(5);
  for (int i = 0; i < 10; ++i) {
    const ToeplitzProblem p = a.admissible_problem(2, InstanceMix::General, true);
    const ToeplitzProblem q = b.admissible_problem(2, InstanceMix::General, true);
    CHECK(p.admissible());
    CHECK(max_abs(p.symbol().xbarx() - q.symbol().xbarx()) == 0.0);
    CHECK(max_abs(p.weight().pluriharmonic() - q.weight().pluriharmonic()) == 0.0);
  }
  for (int i = 0; i < 10; ++i) {
    CHECK(a.admissible_problem(1, InstanceMix::CompactBiased).admissible());
    CHECK(a.admissible_model(2).admissible());
    const cd l = a.admissible_lambda();
    CHECK(l.real() >= -2.0);
    CHECK(l.real() < 0.24);
  }
}

TEST_CASE("fast suites pass for several seeds") {
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    for (Index n : {1, 2}) {
      for (const char* name : {"involution", "symplecticity", "factorization", "mehler", "bergman", "mixed_block", "agreement"}) {
        const SuiteResult r = run_suite(name, {seed, n});
        INFO(name << " seed " << seed << " n " << n << ": " << r.detail);
        CHECK(r.passed);
        CHECK(r.cases > 0);
      }
    }
  }
}

TEST_CASE("oracle suites pass at n = 1") {
  for (const char* name : {"diagonal", "slopes", "compactness"}) {
    const SuiteResult r = run_suite(name, {0, 1});
    INFO(name << ": " << r.detail << " worst " << r.worst);
    CHECK(r.passed);
  }
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 10);
  CHECK(suite_names().front() == "involution");
  CHECK_THROWS_AS(run_suite("nonexistent", {}), InvalidInputError);
  CHECK_THROWS_AS(run_suite("mehler", {0, 3}), InvalidInputError);
}
