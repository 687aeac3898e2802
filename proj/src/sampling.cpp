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

#include "steerkit/sampling.hpp"

#include <Eigen/QR>

namespace steerkit {

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

std::int64_t Sampler::uniform_index(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

Complex Sampler::gaussian() {
  const double re = normal_(rng_);
  const double im = normal_(rng_);
  return Complex(re, im);
}

ComplexVector Sampler::unit_vector(Index dim) {
  ComplexVector v(dim);
  for (Index i = 0; i < dim; ++i) v[i] = gaussian();
  return v / v.norm();
}

ComplexMatrix Sampler::gaussian_matrix(Index rows, Index cols) {
  ComplexMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = gaussian();
  return m;
}

ComplexMatrix Sampler::orthonormal_columns(Index dim, Index count) {
  Eigen::HouseholderQR<ComplexMatrix> qr(gaussian_matrix(dim, count));
  return qr.householderQ() * ComplexMatrix::Identity(dim, count);
}

BipartiteState Sampler::state(Index d1, Index d2) {
  return make_state(gaussian_matrix(d1, d2), true);
}

BipartiteState Sampler::rank_deficient_state(Index d1, Index d2, Index rank) {
  ComplexMatrix left = orthonormal_columns(d1, rank);
  ComplexMatrix right = orthonormal_columns(d2, rank);
  RealVector coefficients(rank);
  for (Index j = 0; j < rank; ++j) coefficients[j] = uniform(0.3, 1.0);
  coefficients /= coefficients.norm();

  ComplexMatrix coeffs = ComplexMatrix::Zero(d1, d2);
  for (Index j = 0; j < rank; ++j) {
    coeffs += coefficients[j] * left.col(j) * right.col(j).transpose();
  }
  return make_state(coeffs, true);
}

Projector Sampler::projector(Index dim, Index rank) {
  return projector_onto(orthonormal_columns(dim, rank));
}

}  // namespace steerkit
