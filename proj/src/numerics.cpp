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

#include "steerkit/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace steerkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::ZeroState: return "ZeroState";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::NotProjector: return "NotProjector";
    case ErrorCode::ZeroProbability: return "ZeroProbability";
    case ErrorCode::NullComponent: return "NullComponent";
    case ErrorCode::OutsideSupport: return "OutsideSupport";
    case ErrorCode::InconsistentInput: return "InconsistentInput";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const Complex& z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

double hermiticity_residual(const ComplexMatrix& m) {
  return max_abs(m - m.adjoint());
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix out = m.adjoint();
  out += m;
  return out / 2.0;
}

HermitianEigen hermitian_eig(const ComplexMatrix& h, const TolerancePolicy& tol) {
  require(h.size() > 0 && h.rows() == h.cols(), ErrorCode::DimensionMismatch,
          "hermitian_eig needs a nonempty square matrix");
  require(all_finite(h), ErrorCode::InvalidInput, "matrix has non-finite entries");
  require(hermiticity_residual(h) <= tol.hermiticity_tol, ErrorCode::NonHermitian,
          "matrix is not Hermitian within tolerance");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  require(solver.info() == Eigen::Success, ErrorCode::InvalidInput,
          "eigensolver failed to converge");

  // Eigen returns ascending order; flip to descending. The reversal is a
  // stable permutation, which fixes the order inside degenerate blocks.
  const Index n = h.rows();
  HermitianEigen out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

SingularValueData svd(const ComplexMatrix& c) {
  require(c.size() > 0, ErrorCode::DimensionMismatch, "svd needs a nonempty matrix");
  require(all_finite(c), ErrorCode::InvalidInput, "matrix has non-finite entries");

  Eigen::JacobiSVD<ComplexMatrix> solver(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SingularValueData out;
  out.left = solver.matrixU();
  out.singular_values = solver.singularValues();
  out.right = solver.matrixV();
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& rho, const TolerancePolicy& tol) {
  HermitianEigen eig = hermitian_eig(rho, tol);

  RealVector clipped = eig.eigenvalues;
  for (Index k = 0; k < clipped.size(); ++k) {
    require(clipped[k] >= -tol.psd_clip, ErrorCode::NotPSD,
            "matrix has an eigenvalue below -psd_clip: " + std::to_string(clipped[k]));
    clipped[k] = std::sqrt(std::max(clipped[k], 0.0));
  }

  ComplexMatrix root = eig.eigenvectors * clipped.asDiagonal() * eig.eigenvectors.adjoint();
  return hermitian_part(root);
}

}  // namespace steerkit
