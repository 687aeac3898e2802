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

#include "steerkit/bipartite_state.hpp"

#include <cmath>

namespace steerkit {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kDensityTol = 1e-10;

void validate_density(const ComplexMatrix& m, const TolerancePolicy& tol) {
  require(hermiticity_residual(m) <= kDensityTol, ErrorCode::NonHermitian,
          "reduced density operator is not Hermitian");
  require(std::abs(m.trace().real() - 1.0) <= kDensityTol &&
              std::abs(m.trace().imag()) <= kDensityTol,
          ErrorCode::InvalidInput, "reduced density operator does not have unit trace");
  HermitianEigen eig = hermitian_eig(m, tol);
  require(eig.eigenvalues.minCoeff() >= -tol.psd_clip, ErrorCode::NotPSD,
          "reduced density operator has a negative eigenvalue");
}

}  // namespace

BipartiteState make_state(const ComplexMatrix& raw, bool normalize,
                          const TolerancePolicy& tol) {
  (void)tol;
  require(raw.size() > 0, ErrorCode::DimensionMismatch,
          "state coefficient matrix must be nonempty");
  require(all_finite(raw), ErrorCode::InvalidInput,
          "state coefficient matrix has non-finite entries");

  const double norm = raw.norm();
  if (normalize) {
    require(norm > 0.0, ErrorCode::ZeroState, "cannot normalize the zero matrix");
    return BipartiteState{raw / norm};
  }
  require(std::abs(norm - 1.0) <= kNormTol, ErrorCode::NotNormalized,
          "coefficient matrix norm is " + std::to_string(norm) + ", expected 1");
  return BipartiteState{raw};
}

DensityOp reduced_density(const BipartiteState& state, int side,
                          const TolerancePolicy& tol) {
  require(side == 1 || side == 2, ErrorCode::InvalidInput, "side must be 1 or 2");
  const ComplexMatrix& c = state.coeffs;

  // With c(k,n) the amplitude on |k>⊗|n>:
  //   rho_1[k,k'] = sum_n c(k,n) conj(c(k',n))        = c c†
  //   rho_2[n,n'] = sum_k c(k,n) conj(c(k,n'))        = transpose(c) conj(c)
  ComplexMatrix m;
  if (side == 1) {
    m = c * c.adjoint();
  } else {
    m = c.transpose() * c.conjugate();
  }
  m = hermitian_part(m);
  validate_density(m, tol);
  return DensityOp{std::move(m), side};
}

SchmidtDecomposition schmidt(const BipartiteState& state, const TolerancePolicy& tol) {
  SingularValueData sv = svd(state.coeffs);

  const double cutoff = tol.rank_cutoff * sv.singular_values[0];
  Index rank = 0;
  while (rank < sv.singular_values.size() && sv.singular_values[rank] > cutoff) ++rank;
  require(rank > 0, ErrorCode::ZeroState, "state has no Schmidt coefficient above cutoff");

  SchmidtDecomposition out;
  out.rank = rank;
  out.coefficients = sv.singular_values.head(rank);
  out.left_vectors = sv.left.leftCols(rank);
  // c = U diag(s) V†, so in c(k,n) = sum_j s_j u_j(k) w_j(n) the right-side
  // partner vectors are the conjugated columns of V.
  out.right_vectors = sv.right.leftCols(rank).conjugate();

  // Phase convention: the largest-magnitude entry of each left vector is made
  // real positive and the partner vector absorbs the compensating phase.
  for (Index j = 0; j < rank; ++j) {
    Index at = 0;
    out.left_vectors.col(j).cwiseAbs().maxCoeff(&at);
    const Complex z = out.left_vectors(at, j);
    if (std::abs(z) > 0.0) {
      const Complex phase = z / std::abs(z);
      out.left_vectors.col(j) *= std::conj(phase);
      out.right_vectors.col(j) *= phase;
    }
  }
  return out;
}

ComplexMatrix schmidt_reconstruct(const SchmidtDecomposition& sd) {
  ComplexMatrix c = ComplexMatrix::Zero(sd.left_vectors.rows(), sd.right_vectors.rows());
  for (Index j = 0; j < sd.rank; ++j) {
    c += sd.coefficients[j] * sd.left_vectors.col(j) * sd.right_vectors.col(j).transpose();
  }
  return c;
}

}  // namespace steerkit
