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

#include "steerkit/numerics.hpp"

namespace steerkit {

/// Two-particle state vector in fixed product bases. coeffs(k, n) is the
/// amplitude on |k>⊗|n>, and the Frobenius norm is one.
struct BipartiteState {
  ComplexMatrix coeffs;

  Index d1() const { return coeffs.rows(); }
  Index d2() const { return coeffs.cols(); }
};

/// Reduced density operator of one subsystem. side is 1 or 2.
struct DensityOp {
  ComplexMatrix matrix;
  int side = 0;

  Index dim() const { return matrix.rows(); }
};

/// coeffs(k,n) = sum_j coefficients[j] * left(k,j) * right(n,j). Coefficients
/// are positive, descending, and truncated at the relative rank cutoff; their
/// squares are the common positive spectrum of both reduced density operators.
struct SchmidtDecomposition {
  RealVector coefficients;
  ComplexMatrix left_vectors;   // d1 x rank, orthonormal columns
  ComplexMatrix right_vectors;  // d2 x rank, orthonormal columns
  Index rank = 0;
};

BipartiteState make_state(const ComplexMatrix& raw, bool normalize,
                          const TolerancePolicy& tol = {});

DensityOp reduced_density(const BipartiteState& state, int side,
                          const TolerancePolicy& tol = {});

SchmidtDecomposition schmidt(const BipartiteState& state, const TolerancePolicy& tol = {});

/// Rebuild the coefficient matrix from Schmidt data.
ComplexMatrix schmidt_reconstruct(const SchmidtDecomposition& sd);

}  // namespace steerkit
