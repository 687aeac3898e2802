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

#include <optional>

#include "steerkit/antilinear.hpp"

namespace steerkit {

/// Tolerance for deciding that two steered vectors (or two normalized range
/// projections) are the same vector. Equality is vector equality, not ray
/// equality: a phase factor makes two outcomes different.
inline constexpr double kSteeringEqualityTol = 1e-9;

/// First-subsystem event. The matrix must be Hermitian and idempotent within
/// 1e-10; operations taking a Projector re-check this and raise NotProjector.
struct Projector {
  ComplexMatrix matrix;

  Index dim() const { return matrix.rows(); }
};

Projector projector_onto(const ComplexMatrix& orthonormal_columns);

/// Result of conditioning the distant subsystem on a local outcome. An
/// elementary event yields a state vector, a general event a density
/// operator. probability <= rank_cutoff^2 flags the outcome impossible and no
/// distant state is produced.
struct SteeringOutcome {
  double probability = 0.0;
  bool possible = false;
  std::optional<ComplexVector> distant_vector;
  std::optional<DensityOp> distant_density;
};

struct EquivalenceDecision {
  bool equivalent = false;
  double scale = 0.0;  // ||q1 psi|| / ||q1 psi'||, meaningful when equivalent
};

struct MaxProbRepresentative {
  ComplexVector representative;
  double probability = 0.0;
};

struct ReachConstruction {
  ComplexVector nearby_vector;  // unit vector in support(rho_1)
  double probability = 0.0;
};

SteeringOutcome steer_elementary(const BipartiteState& state, const ComplexVector& psi1,
                                 const TolerancePolicy& tol = {});

SteeringOutcome steer_event(const BipartiteState& state, const Projector& p1,
                            const TolerancePolicy& tol = {});

/// Independent reference implementation: builds the full d1*d2 projector onto
/// the state vector and evaluates the trace rule and the conditional state by
/// explicit partial trace. Kept free of the antilinear code path so the two
/// routes check each other.
SteeringOutcome trace_rule_oracle(const BipartiteState& state, const Projector& p1,
                                  const TolerancePolicy& tol = {});

/// Two nearby vectors steer to the same distant vector iff their range
/// projections are positively collinear.
EquivalenceDecision steering_equivalent(const BipartiteState& state,
                                        const ComplexVector& psi,
                                        const ComplexVector& psi_prime,
                                        const TolerancePolicy& tol = {});

/// The unit vector in the support of rho_1 that steers like psi with the
/// largest probability, and that probability.
MaxProbRepresentative max_prob_representative(const BipartiteState& state,
                                              const ComplexVector& psi,
                                              const TolerancePolicy& tol = {});

/// Constructive surjectivity: a nearby unit vector in support(rho_1) whose
/// measurement steers the distant subsystem into the given target.
ReachConstruction reach_target(const BipartiteState& state, const ComplexVector& phi2,
                               const TolerancePolicy& tol = {});

/// Distance between x and the reference after aligning the global phase of x
/// at the largest-magnitude component of the reference.
double phase_aligned_distance(const ComplexVector& x, const ComplexVector& reference);

}  // namespace steerkit
