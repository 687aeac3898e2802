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

#include "steerkit/steering.hpp"

#include <cmath>

namespace steerkit {

namespace {

constexpr double kUnitTol = 1e-10;
constexpr double kProjectorTol = 1e-10;

void require_unit(const ComplexVector& v, const char* what) {
  require(std::abs(v.norm() - 1.0) <= kUnitTol, ErrorCode::NotUnit,
          std::string(what) + " must be a unit vector");
}

void require_projector(const Projector& p) {
  require(p.matrix.size() > 0 && p.matrix.rows() == p.matrix.cols(),
          ErrorCode::NotProjector, "projector matrix must be square");
  require(hermiticity_residual(p.matrix) <= kProjectorTol, ErrorCode::NotProjector,
          "projector is not Hermitian");
  require(max_abs(p.matrix * p.matrix - p.matrix) <= kProjectorTol,
          ErrorCode::NotProjector, "projector is not idempotent");
}

DensityOp distant_density(ComplexMatrix m, const TolerancePolicy& tol) {
  m = hermitian_part(m);
  DensityOp out{std::move(m), 2};
  HermitianEigen eig = hermitian_eig(out.matrix, tol);
  require(eig.eigenvalues.minCoeff() >= -tol.psd_clip, ErrorCode::NotPSD,
          "conditional state has a negative eigenvalue");
  return out;
}

/// Range projector of rho_1, from the Schmidt left vectors.
ComplexMatrix support_projector_1(const BipartiteState& state, const TolerancePolicy& tol) {
  SchmidtDecomposition sd = schmidt(state, tol);
  return sd.left_vectors * sd.left_vectors.adjoint();
}

}  // namespace

Projector projector_onto(const ComplexMatrix& orthonormal_columns) {
  require(orthonormal_columns.size() > 0, ErrorCode::DimensionMismatch,
          "projector needs at least one column");
  Projector p{orthonormal_columns * orthonormal_columns.adjoint()};
  require_projector(p);
  return p;
}

SteeringOutcome steer_elementary(const BipartiteState& state, const ComplexVector& psi1,
                                 const TolerancePolicy& tol) {
  require_unit(psi1, "psi1");
  AntilinearOp a = from_state(state);
  ComplexVector image = a.apply(psi1);

  SteeringOutcome out;
  out.probability = image.squaredNorm();
  out.possible = out.probability > tol.rank_cutoff * tol.rank_cutoff;
  if (out.possible) {
    out.distant_vector = image / image.norm();
  }
  return out;
}

SteeringOutcome steer_event(const BipartiteState& state, const Projector& p1,
                            const TolerancePolicy& tol) {
  require_projector(p1);
  require(p1.dim() == state.d1(), ErrorCode::DimensionMismatch,
          "projector does not act on the nearby subsystem space");

  const ComplexMatrix& c = state.coeffs;
  // <Phi, (P1 ⊗ I) Phi> evaluated column-wise over the distant basis.
  const double p = (c.adjoint() * p1.matrix * c).trace().real();

  require(p > tol.rank_cutoff * tol.rank_cutoff, ErrorCode::ZeroProbability,
          "event has vanishing probability in this state");

  // Assemble A P1 A† by applying it to the distant basis vectors.
  AntilinearOp a = from_state(state);
  AntilinearOp a_dag = adjoint(a);
  ComplexMatrix composite(state.d2(), state.d2());
  for (Index n = 0; n < state.d2(); ++n) {
    ComplexVector basis = ComplexVector::Zero(state.d2());
    basis[n] = 1.0;
    composite.col(n) = a.apply(p1.matrix * a_dag.apply(basis));
  }

  SteeringOutcome out;
  out.probability = p;
  out.possible = true;
  out.distant_density = distant_density(composite / p, tol);
  return out;
}

SteeringOutcome trace_rule_oracle(const BipartiteState& state, const Projector& p1,
                                  const TolerancePolicy& tol) {
  require_projector(p1);
  require(p1.dim() == state.d1(), ErrorCode::DimensionMismatch,
          "projector does not act on the nearby subsystem space");

  const Index d1 = state.d1();
  const Index d2 = state.d2();
  const Index d = d1 * d2;

  // Full state vector with composite index k*d2 + n, its projector, and the
  // event extended by the distant identity.
  ComplexVector phi(d);
  for (Index k = 0; k < d1; ++k)
    for (Index n = 0; n < d2; ++n) phi[k * d2 + n] = state.coeffs(k, n);
  ComplexMatrix rho12 = phi * phi.adjoint();

  ComplexMatrix extended = ComplexMatrix::Zero(d, d);
  for (Index k = 0; k < d1; ++k)
    for (Index kp = 0; kp < d1; ++kp)
      for (Index n = 0; n < d2; ++n)
        extended(k * d2 + n, kp * d2 + n) = p1.matrix(k, kp);

  const double p = (extended * rho12).trace().real();
  require(p > tol.rank_cutoff * tol.rank_cutoff, ErrorCode::ZeroProbability,
          "event has vanishing probability in this state");

  // Conditional state by explicit partial trace over the nearby subsystem.
  ComplexMatrix product = rho12 * extended;
  ComplexMatrix conditional = ComplexMatrix::Zero(d2, d2);
  for (Index n = 0; n < d2; ++n)
    for (Index np = 0; np < d2; ++np)
      for (Index k = 0; k < d1; ++k)
        conditional(n, np) += product(k * d2 + n, k * d2 + np);

  SteeringOutcome out;
  out.probability = p;
  out.possible = true;
  out.distant_density = distant_density(conditional / p, tol);
  return out;
}

EquivalenceDecision steering_equivalent(const BipartiteState& state,
                                        const ComplexVector& psi,
                                        const ComplexVector& psi_prime,
                                        const TolerancePolicy& tol) {
  require_unit(psi, "psi");
  require_unit(psi_prime, "psi'");
  ComplexMatrix q1 = support_projector_1(state, tol);
  require(psi.size() == q1.rows() && psi_prime.size() == q1.rows(),
          ErrorCode::DimensionMismatch, "vectors do not live in the nearby space");

  ComplexVector a = q1 * psi;
  ComplexVector b = q1 * psi_prime;
  const double na = a.norm();
  const double nb = b.norm();
  require(na > tol.rank_cutoff && nb > tol.rank_cutoff, ErrorCode::NullComponent,
          "a vector has no component in the support of rho_1");

  EquivalenceDecision out;
  out.scale = na / nb;
  out.equivalent = (a / na - b / nb).norm() <= kSteeringEqualityTol;
  return out;
}

MaxProbRepresentative max_prob_representative(const BipartiteState& state,
                                              const ComplexVector& psi,
                                              const TolerancePolicy& tol) {
  require_unit(psi, "psi");
  ComplexMatrix q1 = support_projector_1(state, tol);
  require(psi.size() == q1.rows(), ErrorCode::DimensionMismatch,
          "vector does not live in the nearby space");

  ComplexVector projected = q1 * psi;
  const double weight = projected.norm();
  require(weight > tol.rank_cutoff, ErrorCode::NullComponent,
          "vector has no component in the support of rho_1");

  MaxProbRepresentative out;
  out.representative = projected / weight;
  out.probability = from_state(state).apply(out.representative).squaredNorm();
  return out;
}

ReachConstruction reach_target(const BipartiteState& state, const ComplexVector& phi2,
                               const TolerancePolicy& tol) {
  require_unit(phi2, "phi2");
  require(phi2.size() == state.d2(), ErrorCode::DimensionMismatch,
          "target does not live in the distant space");

  SchmidtDecomposition sd = schmidt(state, tol);
  // Coordinates of the target in the right Schmidt basis; a target in the
  // support keeps its full norm under projection.
  ComplexVector b = sd.right_vectors.adjoint() * phi2;
  require(b.norm() >= 1.0 - kSteeringEqualityTol, ErrorCode::OutsideSupport,
          "target is not in the support of rho_2");

  ComplexVector raw = ComplexVector::Zero(state.d1());
  for (Index j = 0; j < sd.rank; ++j) {
    raw += std::conj(b[j] / sd.coefficients[j]) * sd.left_vectors.col(j);
  }

  ReachConstruction out;
  out.nearby_vector = raw / raw.norm();
  out.probability = from_state(state).apply(out.nearby_vector).squaredNorm();
  return out;
}

double phase_aligned_distance(const ComplexVector& x, const ComplexVector& reference) {
  require(x.size() == reference.size(), ErrorCode::DimensionMismatch,
          "vectors must have equal dimension");
  Index at = 0;
  reference.cwiseAbs().maxCoeff(&at);
  const Complex rz = reference[at];
  const Complex xz = x[at];
  if (std::abs(rz) == 0.0 || std::abs(xz) == 0.0) {
    return (x - reference).norm();
  }
  const Complex alignment = (rz / std::abs(rz)) * std::conj(xz / std::abs(xz));
  return (alignment * x - reference).norm();
}

}  // namespace steerkit
