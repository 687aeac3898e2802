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

#include <Eigen/Dense>
#include <complex>

#include "steerkit/errors.hpp"

namespace steerkit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Thresholds for every rank, support and positivity decision in the library.
///
/// rank_cutoff is relative to the largest singular value (or eigenvalue), so
/// support projectors are invariant under rescaling of the input. psd_clip is
/// the absolute window inside which small negative eigenvalues of nominally
/// positive operators are clipped to zero.
struct TolerancePolicy {
  double rank_cutoff = 1e-12;
  double hermiticity_tol = 1e-10;
  double psd_clip = 1e-14;
};

/// Eigenvalues sorted descending, eigenvectors as matching orthonormal columns.
struct HermitianEigen {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Thin decomposition c = left * diag(singular_values) * right.adjoint(),
/// singular values nonnegative and descending.
struct SingularValueData {
  ComplexMatrix left;
  RealVector singular_values;
  ComplexMatrix right;
};

HermitianEigen hermitian_eig(const ComplexMatrix& h, const TolerancePolicy& tol = {});

SingularValueData svd(const ComplexMatrix& c);

/// Hermitian PSD square root. Eigenvalues in [-psd_clip, 0) are clipped to
/// zero; anything below -psd_clip raises NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& rho, const TolerancePolicy& tol = {});

double max_abs(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);
double hermiticity_residual(const ComplexMatrix& m);

/// (m + m†)/2 into a fresh matrix; safe to assign back to the argument.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

}  // namespace steerkit
