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

#include "steerkit/bipartite_state.hpp"

namespace steerkit {

/// Antilinear map between the two subsystem spaces, stored as the matrix of
/// the fixed action convention
///
///   apply(psi) = matrix * conj(psi).
///
/// For the representation of a bipartite state the matrix is the transpose of
/// the coefficient matrix, and the adjoint under the pairing
/// <A psi, phi> = conj(<psi, A† phi>) is the plain transpose.
struct AntilinearOp {
  ComplexMatrix matrix;  // codomain_dim x domain_dim

  Index domain_dim() const { return matrix.cols(); }
  Index codomain_dim() const { return matrix.rows(); }

  ComplexVector apply(const ComplexVector& psi) const;
};

/// Both polar factorizations of the antilinear representative:
///   A = correlation ∘ sqrt_rho1  and  A = sqrt_rho2 ∘ correlation ∘ q1.
/// correlation is antiunitary from support(rho_1) onto support(rho_2) and
/// zero on the null space; correlation_inverse maps the partner basis back.
struct PolarData {
  AntilinearOp correlation;          // U : H1 -> H2
  AntilinearOp correlation_inverse;  // U^{-1} : H2 -> H1
  ComplexMatrix sqrt_rho1;
  ComplexMatrix sqrt_rho2;
  ComplexMatrix q1;  // range projector of rho_1
  ComplexMatrix q2;  // range projector of rho_2
  SchmidtDecomposition schmidt;
};

/// Verification residuals of a polar factorization, all expected at 1e-10.
struct PolarResiduals {
  double left_factorization;   // ||A - U sqrt_rho1||_HS
  double right_factorization;  // ||A - sqrt_rho2 U q1||_HS
  double similarity;           // max-norm of rho_2 - U rho_1 U^{-1} q2
  double antiunitarity;        // deviation of <Ux,Uy> = <y,x> on the support
};

/// Antilinear representative of a state: apply(psi) is the partial scalar
/// product of psi with the state over subsystem 1.
AntilinearOp from_state(const BipartiteState& state);

AntilinearOp adjoint(const AntilinearOp& op);

double hs_norm_sq(const AntilinearOp& op);

/// Matrix of the linear composite  op_after ∘ L ∘ op_before  is not needed;
/// what recurs is the matrix of an antilinear op composed with linear maps:
///   (A ∘ L) psi = A(L psi)      has matrix  A.matrix * conj(L)
///   (L ∘ A) psi = L(A psi)      has matrix  L * A.matrix
ComplexMatrix compose_matrix(const AntilinearOp& op, const ComplexMatrix& before_linear);

PolarData polar_factorize(const AntilinearOp& a, const BipartiteState& state,
                          const TolerancePolicy& tol = {});

/// Max-norm residual of transporting the positive part of rho_1 into rho_2 by
/// the correlation operator.
double check_similarity(const PolarData& polar, const DensityOp& rho1,
                        const DensityOp& rho2);

PolarResiduals polar_residuals(const AntilinearOp& a, const BipartiteState& state,
                               const PolarData& polar);

}  // namespace steerkit
