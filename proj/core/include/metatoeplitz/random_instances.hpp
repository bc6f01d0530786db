#pragma once

#include <cstdint>
#include <random>

#include "metatoeplitz/model.hpp"
#include "metatoeplitz/problem.hpp"

namespace metatoeplitz {

enum class InstanceMix {
  General,        // symbol scaled to a random fraction of the admissible range
  CompactBiased,  // e^q decays along every direction up to a small perturbation
};

/// Seeded source of random admissible instances. Two generators built from
/// the same seed produce the same sequence on every platform that ships the
/// standard mt19937_64 (the distributions are written out by hand).
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed);

  double uniform(double lo, double hi);
  double normal();
  cd complex_normal();
  CMatrix complex_matrix(Index n);
  CMatrix symmetric_matrix(Index n);
  CVector complex_vector(Index n);

  /// H = X^* X / n + 0.3 I, plus a random symmetric P when requested.
  Weight weight(Index n, bool pluriharmonic);

  ToeplitzProblem admissible_problem(Index n, InstanceMix mix, bool pluriharmonic = false);

  /// lambda with Re lambda in [-2, 0.24], Im lambda in [-1.5, 1.5].
  cd admissible_lambda();
  /// Model instance with random lambda and a random symmetric A scaled into
  /// the admissible range.
  ModelInstance admissible_model(Index n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace metatoeplitz
