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

#include "steerkit/antilinear.hpp"

namespace steerkit {

namespace {
constexpr double kFactorizationTol = 1e-10;
}

AntilinearOp from_state(const BipartiteState& state) {
  // Component n of the partial scalar product is sum_k c(k,n) conj(psi_k),
  // which under apply(psi) = M conj(psi) fixes M = transpose(coeffs).
  return AntilinearOp{state.coeffs.transpose()};
}

ComplexVector AntilinearOp::apply(const ComplexVector& psi) const {
  require(psi.size() == domain_dim(), ErrorCode::DimensionMismatch,
          "vector dimension does not match the operator domain");
  return matrix * psi.conjugate();
}

AntilinearOp adjoint(const AntilinearOp& op) {
  return AntilinearOp{op.matrix.transpose()};
}

double hs_norm_sq(const AntilinearOp& op) {
  return op.matrix.squaredNorm();
}

ComplexMatrix compose_matrix(const AntilinearOp& op, const ComplexMatrix& before_linear) {
  require(before_linear.rows() == op.domain_dim(), ErrorCode::DimensionMismatch,
          "linear factor does not match the operator domain");
  return op.matrix * before_linear.conjugate();
}

PolarData polar_factorize(const AntilinearOp& a, const BipartiteState& state,
                          const TolerancePolicy& tol) {
  const ComplexMatrix expected = state.coeffs.transpose();
  require(a.matrix.rows() == expected.rows() && a.matrix.cols() == expected.cols(),
          ErrorCode::DimensionMismatch, "operator shape does not match the state");
  require((a.matrix - expected).norm() <= kFactorizationTol, ErrorCode::InconsistentInput,
          "operator is not the representative of the given state");

  SchmidtDecomposition sd = schmidt(state, tol);
  const ComplexMatrix& u = sd.left_vectors;
  const ComplexMatrix& w = sd.right_vectors;

  PolarData out;
  // The correlation operator sends the k-th left Schmidt vector to the k-th
  // right one and conjugates expansion coefficients; as a matrix under the
  // action convention that is sum_k w_k u_k^T, zero on the null space.
  out.correlation = AntilinearOp{w * u.transpose()};
  out.correlation_inverse = AntilinearOp{u * w.transpose()};
  out.sqrt_rho1 = u * sd.coefficients.asDiagonal() * u.adjoint();
  out.sqrt_rho2 = w * sd.coefficients.asDiagonal() * w.adjoint();
  out.q1 = u * u.adjoint();
  out.q2 = w * w.adjoint();
  out.schmidt = std::move(sd);
  return out;
}

double check_similarity(const PolarData& polar, const DensityOp& rho1,
                        const DensityOp& rho2) {
  const ComplexMatrix& mu = polar.correlation.matrix;
  const ComplexMatrix& minv = polar.correlation_inverse.matrix;
  require(rho1.matrix.rows() == mu.cols() && rho2.matrix.rows() == mu.rows(),
          ErrorCode::DimensionMismatch,
          "density operators do not match the correlation operator");

  // U rho_1 U^{-1} q2 is linear; composing the antilinear factors gives
  // matrix  mu * conj(rho_1) * conj(minv) * q2.
  ComplexMatrix transported =
      mu * rho1.matrix.conjugate() * minv.conjugate() * polar.q2;
  return max_abs(rho2.matrix - transported);
}

PolarResiduals polar_residuals(const AntilinearOp& a, const BipartiteState& state,
                               const PolarData& polar) {
  PolarResiduals out{};

  out.left_factorization =
      (a.matrix - compose_matrix(polar.correlation, polar.sqrt_rho1)).norm();
  out.right_factorization =
      (a.matrix - polar.sqrt_rho2 * compose_matrix(polar.correlation, polar.q1)).norm();
  out.similarity =
      check_similarity(polar, reduced_density(state, 1), reduced_density(state, 2));

  // Antiunitarity on the support: the images of the left Schmidt basis must
  // be orthonormal; <Ux,Uy> = <y,x> then follows for all support vectors.
  ComplexMatrix images = polar.correlation.matrix * polar.schmidt.left_vectors.conjugate();
  ComplexMatrix gram = images.adjoint() * images;
  out.antiunitarity =
      max_abs(gram - ComplexMatrix::Identity(gram.rows(), gram.cols()));
  return out;
}

}  // namespace steerkit
