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

#include "steerkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steerkit/sampling.hpp"
#include "steerkit/steering.hpp"

namespace steerkit {

namespace {

/// Rank-1 density operator of a steered vector, for comparison with the
/// conditional state of the trace-rule route.
ComplexMatrix outer(const ComplexVector& v) { return v * v.adjoint(); }

struct SuiteContext {
  const BipartiteState& state;
  AntilinearOp a;
  AntilinearOp a_dag;
  PolarData polar;
  DensityOp rho1;
  DensityOp rho2;
  std::uint64_t seed;
  int trials;
};

using Check = double (*)(SuiteContext&, Sampler&);

InvariantResult run_check(SuiteContext& ctx, const std::string& name, double tolerance,
                          const Check& check) {
  InvariantResult result{name, 0.0, tolerance, ctx.trials, false};
  for (int t = 0; t < ctx.trials; ++t) {
    Sampler sampler(ctx.seed + static_cast<std::uint64_t>(t));
    result.max_residual = std::max(result.max_residual, check(ctx, sampler));
  }
  result.pass = result.max_residual <= tolerance;
  return result;
}

double check_adjoint_pairing(SuiteContext& ctx, Sampler& sampler) {
  ComplexVector psi = sampler.unit_vector(ctx.state.d1());
  ComplexVector phi = sampler.unit_vector(ctx.state.d2());
  const Complex lhs = ctx.a.apply(psi).adjoint() * phi;
  const Complex rhs = psi.adjoint() * ctx.a_dag.apply(phi);
  return std::abs(lhs - std::conj(rhs));
}

double check_antilinearity(SuiteContext& ctx, Sampler& sampler) {
  ComplexVector psi = sampler.unit_vector(ctx.state.d1());
  ComplexVector phi = sampler.unit_vector(ctx.state.d1());
  const Complex alpha = sampler.gaussian();
  const Complex beta = sampler.gaussian();
  ComplexVector lhs = ctx.a.apply(alpha * psi + beta * phi);
  ComplexVector rhs =
      std::conj(alpha) * ctx.a.apply(psi) + std::conj(beta) * ctx.a.apply(phi);
  return (lhs - rhs).norm();
}

double check_hs_norm_state(SuiteContext& ctx, Sampler&) {
  return std::abs(hs_norm_sq(ctx.a) - 1.0);
}

double check_hs_norm_adjoint(SuiteContext& ctx, Sampler&) {
  return std::abs(hs_norm_sq(ctx.a) - hs_norm_sq(ctx.a_dag));
}

double check_event_oracle_probability(SuiteContext& ctx, Sampler& sampler) {
  const Index rank = sampler.uniform_index(1, ctx.state.d1());
  Projector p = sampler.projector(ctx.state.d1(), rank);
  SteeringOutcome lhs = steer_event(ctx.state, p);
  SteeringOutcome rhs = trace_rule_oracle(ctx.state, p);
  return std::abs(lhs.probability - rhs.probability);
}

double check_event_oracle_state(SuiteContext& ctx, Sampler& sampler) {
  const Index rank = sampler.uniform_index(1, ctx.state.d1());
  Projector p = sampler.projector(ctx.state.d1(), rank);
  SteeringOutcome lhs = steer_event(ctx.state, p);
  SteeringOutcome rhs = trace_rule_oracle(ctx.state, p);
  return max_abs(lhs.distant_density->matrix - rhs.distant_density->matrix);
}

double check_elementary_oracle_state(SuiteContext& ctx, Sampler& sampler) {
  ComplexVector psi = sampler.unit_vector(ctx.state.d1());
  SteeringOutcome elementary = steer_elementary(ctx.state, psi);
  if (!elementary.possible) return 0.0;
  Projector p = projector_onto(psi);
  SteeringOutcome oracle = trace_rule_oracle(ctx.state, p);
  double residual = std::abs(elementary.probability - oracle.probability);
  return std::max(residual, max_abs(outer(*elementary.distant_vector) -
                                    oracle.distant_density->matrix));
}

double check_probability_additivity(SuiteContext& ctx, Sampler& sampler) {
  const Index d1 = ctx.state.d1();
  if (d1 < 2) return 0.0;
  ComplexMatrix basis = sampler.orthonormal_basis(d1);
  const Index split = sampler.uniform_index(1, d1 - 1);
  Projector first = projector_onto(basis.leftCols(split));
  Projector second = projector_onto(basis.middleCols(split, d1 - split));
  Projector both = projector_onto(basis);
  const double p_first = steer_event(ctx.state, first).probability;
  const double p_second = steer_event(ctx.state, second).probability;
  const double p_both = steer_event(ctx.state, both).probability;
  return std::abs(p_both - p_first - p_second);
}

double check_basis_total_probability(SuiteContext& ctx, Sampler& sampler) {
  ComplexMatrix basis = sampler.orthonormal_basis(ctx.state.d1());
  double total = 0.0;
  for (Index k = 0; k < basis.cols(); ++k) {
    total += steer_elementary(ctx.state, basis.col(k)).probability;
  }
  return std::abs(total - 1.0);
}

double check_support_factor(SuiteContext& ctx, Sampler&) {
  // A = A q1: the representative annihilates the null space of rho_1.
  return (ctx.a.matrix - compose_matrix(ctx.a, ctx.polar.q1)).norm();
}

double check_null_space_bounds(SuiteContext& ctx, Sampler& sampler) {
  ComplexVector psi = sampler.unit_vector(ctx.state.d1());
  const double image_norm = ctx.a.apply(psi).norm();
  const double support_norm = (ctx.polar.q1 * psi).norm();
  const RealVector& s = ctx.polar.schmidt.coefficients;
  const double upper = s[0] * support_norm;
  const double lower = s[s.size() - 1] * support_norm;
  return std::max(image_norm - upper, lower - image_norm);
}

double check_factorization_left(SuiteContext& ctx, Sampler&) {
  return polar_residuals(ctx.a, ctx.state, ctx.polar).left_factorization;
}

double check_factorization_right(SuiteContext& ctx, Sampler&) {
  return polar_residuals(ctx.a, ctx.state, ctx.polar).right_factorization;
}

double check_similarity_transport(SuiteContext& ctx, Sampler&) {
  return check_similarity(ctx.polar, ctx.rho1, ctx.rho2);
}

double check_antiunitarity(SuiteContext& ctx, Sampler&) {
  return polar_residuals(ctx.a, ctx.state, ctx.polar).antiunitarity;
}

/// Vector with a prescribed support component and, when the null space is
/// nontrivial, a random null-space padding.
ComplexVector padded_vector(SuiteContext& ctx, Sampler& sampler,
                            const ComplexVector& support_part) {
  const Index d1 = ctx.state.d1();
  ComplexVector padded = sampler.uniform(0.2, 1.0) * support_part;
  if (ctx.polar.schmidt.rank < d1) {
    ComplexVector noise = sampler.unit_vector(d1);
    ComplexVector null_part = noise - ctx.polar.q1 * noise;
    if (null_part.norm() > 1e-8) {
      padded += sampler.uniform(0.0, 2.0) * (null_part / null_part.norm());
    }
  }
  return padded / padded.norm();
}

double check_equivalence_padding(SuiteContext& ctx, Sampler& sampler) {
  ComplexVector support_part = ctx.polar.q1 * sampler.unit_vector(ctx.state.d1());
  if (support_part.norm() < 1e-6) return 0.0;
  support_part /= support_part.norm();

  ComplexVector psi = padded_vector(ctx, sampler, support_part);
  ComplexVector psi_prime = padded_vector(ctx, sampler, support_part);

  EquivalenceDecision decision = steering_equivalent(ctx.state, psi, psi_prime);
  if (!decision.equivalent) return 1.0;

  // The witness scale must reproduce the collinearity, and the steered
  // vectors must agree as vectors.
  ComplexVector qa = ctx.polar.q1 * psi;
  ComplexVector qb = ctx.polar.q1 * psi_prime;
  double residual = (qa - decision.scale * qb).norm();
  SteeringOutcome first = steer_elementary(ctx.state, psi);
  SteeringOutcome second = steer_elementary(ctx.state, psi_prime);
  return std::max(residual, (*first.distant_vector - *second.distant_vector).norm());
}

double check_phase_inequivalence(SuiteContext& ctx, Sampler& sampler) {
  ComplexVector psi = sampler.unit_vector(ctx.state.d1());
  if ((ctx.polar.q1 * psi).norm() < 1e-6) return 0.0;
  const double theta = sampler.uniform(1e-3, 2.0 * std::numbers::pi - 1e-3);
  ComplexVector rotated = std::exp(Complex(0.0, theta)) * psi;
  EquivalenceDecision decision = steering_equivalent(ctx.state, psi, rotated);
  return decision.equivalent ? 1.0 : 0.0;
}

double check_max_prob_dominance(SuiteContext& ctx, Sampler& sampler) {
  ComplexVector psi = sampler.unit_vector(ctx.state.d1());
  if ((ctx.polar.q1 * psi).norm() < 1e-6) return 0.0;
  MaxProbRepresentative best = max_prob_representative(ctx.state, psi);
  ComplexVector contender = padded_vector(ctx, sampler, best.representative);
  const double p = steer_elementary(ctx.state, contender).probability;
  return p - best.probability;
}

double check_reach_target_roundtrip(SuiteContext& ctx, Sampler& sampler) {
  const ComplexMatrix& right = ctx.polar.schmidt.right_vectors;
  ComplexVector target = right * sampler.unit_vector(right.cols());
  ReachConstruction reach = reach_target(ctx.state, target);
  SteeringOutcome outcome = steer_elementary(ctx.state, reach.nearby_vector);
  if (!outcome.possible) return 1.0;
  return phase_aligned_distance(*outcome.distant_vector, target);
}

double check_schmidt_reconstruction(SuiteContext& ctx, Sampler&) {
  return max_abs(schmidt_reconstruct(ctx.polar.schmidt) - ctx.state.coeffs);
}

double check_reduced_density_consistency(SuiteContext& ctx, Sampler&) {
  double residual = std::abs(ctx.rho1.matrix.trace().real() - 1.0);
  residual = std::max(residual, std::abs(ctx.rho2.matrix.trace().real() - 1.0));

  // Positive spectra of the two reductions agree.
  HermitianEigen e1 = hermitian_eig(ctx.rho1.matrix);
  HermitianEigen e2 = hermitian_eig(ctx.rho2.matrix);
  const Index rank = ctx.polar.schmidt.rank;
  for (Index k = 0; k < rank; ++k) {
    residual = std::max(residual, std::abs(e1.eigenvalues[k] - e2.eigenvalues[k]));
  }
  return residual;
}

double check_schmidt_vs_reduced(SuiteContext& ctx, Sampler&) {
  HermitianEigen e1 = hermitian_eig(ctx.rho1.matrix);
  double residual = 0.0;
  for (Index k = 0; k < ctx.polar.schmidt.rank; ++k) {
    const double c = ctx.polar.schmidt.coefficients[k];
    residual = std::max(residual, std::abs(c * c - e1.eigenvalues[k]));
  }
  return residual;
}

}  // namespace

std::vector<InvariantResult> run_invariant_suite(const BipartiteState& state,
                                                 std::uint64_t seed, int trials) {
  require(trials >= 1, ErrorCode::InvalidInput, "trials must be at least 1");

  SuiteContext ctx{state,
                   from_state(state),
                   adjoint(from_state(state)),
                   polar_factorize(from_state(state), state),
                   reduced_density(state, 1),
                   reduced_density(state, 2),
                   seed,
                   trials};

  std::vector<InvariantResult> results;
  auto once = [&](const std::string& name, double tol, Check check) {
    SuiteContext single = ctx;
    single.trials = 1;
    results.push_back(run_check(single, name, tol, check));
  };
  auto many = [&](const std::string& name, double tol, Check check) {
    results.push_back(run_check(ctx, name, tol, check));
  };

  many("adjoint_pairing", 1e-12, check_adjoint_pairing);
  many("antilinearity", 1e-12, check_antilinearity);
  once("hs_norm_state", 1e-12, check_hs_norm_state);
  once("hs_norm_adjoint", 1e-13, check_hs_norm_adjoint);
  many("event_oracle_probability", 1e-12, check_event_oracle_probability);
  many("event_oracle_state", 1e-10, check_event_oracle_state);
  many("elementary_oracle_state", 1e-10, check_elementary_oracle_state);
  many("probability_additivity", 1e-11, check_probability_additivity);
  many("basis_total_probability", 1e-10, check_basis_total_probability);
  once("support_factor", 1e-10, check_support_factor);
  many("null_space_bounds", 1e-10, check_null_space_bounds);
  once("factorization_left", 1e-10, check_factorization_left);
  once("factorization_right", 1e-10, check_factorization_right);
  once("similarity_transport", 1e-10, check_similarity_transport);
  once("antiunitarity", 1e-10, check_antiunitarity);
  many("equivalence_padding", 1e-9, check_equivalence_padding);
  many("phase_inequivalence", 0.0, check_phase_inequivalence);
  many("max_prob_dominance", 1e-12, check_max_prob_dominance);
  many("reach_target_roundtrip", 1e-9, check_reach_target_roundtrip);
  once("schmidt_reconstruction", 1e-10, check_schmidt_reconstruction);
  once("reduced_density_consistency", 1e-10, check_reduced_density_consistency);
  once("schmidt_vs_reduced", 1e-10, check_schmidt_vs_reduced);
  return results;
}

}  // namespace steerkit
