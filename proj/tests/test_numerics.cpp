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

#include <doctest.h>

#include "support.hpp"

using namespace steerkit;

namespace {

ComplexMatrix random_hermitian(Sampler& sampler, Index n) {
  ComplexMatrix g = sampler.gaussian_matrix(n, n);
  return (g + g.adjoint()) / 2.0;
}

}  // namespace

TEST_CASE("hermitian_eig handles the identity") {
  HermitianEigen eig = hermitian_eig(ComplexMatrix::Identity(2, 2));
  CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0));
  CHECK(max_abs(eig.eigenvectors.adjoint() * eig.eigenvectors -
                ComplexMatrix::Identity(2, 2)) < 1e-10);
}

TEST_CASE("hermitian_eig sorts a diagonal matrix descending") {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 0) = 0.3;
  h(1, 1) = 0.7;
  HermitianEigen eig = hermitian_eig(h);
  CHECK(eig.eigenvalues[0] == doctest::Approx(0.7));
  CHECK(eig.eigenvalues[1] == doctest::Approx(0.3));
  CHECK(std::abs(eig.eigenvectors(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(eig.eigenvectors(0, 1)) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig reconstructs seeded random matrices") {
  for (std::uint64_t seed : {11, 12, 13}) {
    Sampler sampler(seed);
    ComplexMatrix h = random_hermitian(sampler, 5);
    HermitianEigen eig = hermitian_eig(h);
    ComplexMatrix rebuilt =
        eig.eigenvectors * eig.eigenvalues.asDiagonal() * eig.eigenvectors.adjoint();
    CHECK(max_abs(rebuilt - h) < 1e-10);
    CHECK(max_abs(eig.eigenvectors.adjoint() * eig.eigenvectors -
                  ComplexMatrix::Identity(5, 5)) < 1e-10);
    for (Index k = 1; k < 5; ++k) CHECK(eig.eigenvalues[k] <= eig.eigenvalues[k - 1]);
  }
}

TEST_CASE("hermitian_eig rejects bad input") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eig(m), Error);
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix::Zero(2, 3)), Error);
}

TEST_CASE("svd of a scaled identity") {
  ComplexMatrix c = ComplexMatrix::Identity(2, 2) / std::sqrt(2.0);
  SingularValueData sv = svd(c);
  CHECK(sv.singular_values[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(sv.singular_values[1] == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("svd of a rank-1 outer product") {
  Sampler sampler(21);
  ComplexVector u = 2.0 * sampler.unit_vector(3);
  ComplexVector v = 0.5 * sampler.unit_vector(4);
  SingularValueData sv = svd(u * v.adjoint());
  CHECK(sv.singular_values[0] == doctest::Approx(u.norm() * v.norm()));
  for (Index k = 1; k < sv.singular_values.size(); ++k) {
    CHECK(sv.singular_values[k] == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("svd reconstructs seeded random matrices") {
  Sampler sampler(22);
  ComplexMatrix c = sampler.gaussian_matrix(3, 4);
  SingularValueData sv = svd(c);
  ComplexMatrix rebuilt = sv.left * sv.singular_values.asDiagonal() * sv.right.adjoint();
  CHECK(max_abs(rebuilt - c) < 1e-10);
}

TEST_CASE("svd rejects empty input") {
  CHECK_THROWS_AS(svd(ComplexMatrix(0, 0)), Error);
}

TEST_CASE("singular values match eigenvalues of c c-dagger") {
  for (std::uint64_t seed : {31, 32, 33, 34}) {
    Sampler sampler(seed);
    const Index rows = 2 + static_cast<Index>(seed % 4);
    ComplexMatrix c = sampler.gaussian_matrix(rows, 5);
    SingularValueData sv = svd(c);
    HermitianEigen eig = hermitian_eig(ComplexMatrix(c * c.adjoint()));
    for (Index k = 0; k < sv.singular_values.size(); ++k) {
      const double expected = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
      CHECK(std::abs(sv.singular_values[k] - expected) < 1e-10);
    }
  }
}

TEST_CASE("psd_sqrt of a diagonal matrix") {
  ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
  rho(0, 0) = 0.25;
  rho(1, 1) = 0.75;
  ComplexMatrix root = psd_sqrt(rho);
  CHECK(std::abs(root(0, 0) - 0.5) < 1e-12);
  CHECK(std::abs(root(1, 1) - std::sqrt(0.75)) < 1e-12);
  CHECK(std::abs(root(0, 1)) < 1e-12);
}

TEST_CASE("psd_sqrt of the zero matrix is zero") {
  CHECK(max_abs(psd_sqrt(ComplexMatrix::Zero(3, 3))) == 0.0);
}

TEST_CASE("psd_sqrt squares back to the input and commutes with it") {
  Sampler sampler(41);
  ComplexMatrix c = sampler.gaussian_matrix(4, 4);
  ComplexMatrix rho = c * c.adjoint();
  ComplexMatrix root = psd_sqrt(rho);
  CHECK(max_abs(root * root - rho) < 1e-10);
  CHECK(max_abs(root * rho - rho * root) < 1e-10);
  CHECK(hermiticity_residual(root) < 1e-12);
}

TEST_CASE("psd_sqrt rejects indefinite matrices") {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(1, 1) = -1.0;
  CHECK_THROWS_AS(psd_sqrt(m), Error);
  try {
    psd_sqrt(m);
    FAIL("expected NotPSD");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPSD);
  }
}
