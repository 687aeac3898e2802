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
#include <string>
#include <vector>

#include "steerkit/bipartite_state.hpp"

namespace steerkit {

struct InvariantResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  int trials = 0;
  bool pass = false;
};

/// Runs the module invariant suites against one state with seeded randomness.
/// Trial t draws from seed + t, so independent trials are reproducible in any
/// evaluation order.
std::vector<InvariantResult> run_invariant_suite(const BipartiteState& state,
                                                 std::uint64_t seed, int trials);

}  // namespace steerkit
