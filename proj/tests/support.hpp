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

#include <filesystem>
#include <string>

#include "steerkit/sampling.hpp"

namespace steerkit::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(STEERKIT_FIXTURE_DIR) / name;
}

inline BipartiteState bell_state() {
  ComplexMatrix raw = ComplexMatrix::Identity(2, 2);
  return make_state(raw, true);
}

/// chi ⊗ phi as a coefficient matrix.
inline BipartiteState product_state(const ComplexVector& chi, const ComplexVector& phi) {
  ComplexMatrix raw = chi * phi.transpose();
  return make_state(raw, true);
}

/// Brute-force reduced density operator: assembles the full projector onto
/// the d1*d2 state vector and traces out one subsystem element-wise. Kept
/// independent of the library's reduced_density code path.
inline ComplexMatrix brute_force_reduced(const BipartiteState& state, int side) {
  const Index d1 = state.d1();
  const Index d2 = state.d2();
  ComplexVector phi(d1 * d2);
  for (Index k = 0; k < d1; ++k)
    for (Index n = 0; n < d2; ++n) phi[k * d2 + n] = state.coeffs(k, n);
  ComplexMatrix projector = phi * phi.adjoint();

  if (side == 1) {
    ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
    for (Index k = 0; k < d1; ++k)
      for (Index kp = 0; kp < d1; ++kp)
        for (Index n = 0; n < d2; ++n) out(k, kp) += projector(k * d2 + n, kp * d2 + n);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (Index n = 0; n < d2; ++n)
    for (Index np = 0; np < d2; ++np)
      for (Index k = 0; k < d1; ++k) out(n, np) += projector(k * d2 + n, k * d2 + np);
  return out;
}

}  // namespace steerkit::testing
