// Copyright 2026 The Steerkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

#include "steerkit/steering.hpp"

namespace steerkit {

/// Deterministic generator of random states, vectors, projectors and bases.
/// Everything is a function of the seed and the call sequence only.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  std::int64_t uniform_index(std::int64_t lo, std::int64_t hi);  // inclusive
  Complex gaussian();

  ComplexVector unit_vector(Index dim);
  ComplexMatrix gaussian_matrix(Index rows, Index cols);
  /// Isometry: dim x count matrix with orthonormal columns (QR of a Gaussian).
  ComplexMatrix orthonormal_columns(Index dim, Index count);
  ComplexMatrix orthonormal_basis(Index dim) { return orthonormal_columns(dim, dim); }

  BipartiteState state(Index d1, Index d2);
  /// Schmidt rank exactly `rank`, with coefficients bounded away from zero.
  BipartiteState rank_deficient_state(Index d1, Index d2, Index rank);
  Projector projector(Index dim, Index rank);

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace steerkit
