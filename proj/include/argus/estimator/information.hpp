// This file is part of Argus, a multi-camera SLAM front-end toolkit.
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

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "argus/core/types.hpp"

namespace argus {

/// Information of the pose tangent accumulated from per-observation pixel
/// jacobians: sum_k J_k^T sigma_k^-2 J_k.
inline Matrix6d fisher_information(const std::vector<Matrix26d>& jacobians,
                                   const std::vector<double>& sigmas) {
  if (jacobians.empty()) {
    throw std::invalid_argument("fisher_information: no jacobian blocks");
  }
  if (jacobians.size() != sigmas.size()) {
    throw std::invalid_argument("fisher_information: size mismatch");
  }
  Matrix6d info = Matrix6d::Zero();
  for (std::size_t k = 0; k < jacobians.size(); ++k) {
    const double w = 1.0 / (sigmas[k] * sigmas[k]);
    info.noalias() += jacobians[k].transpose() * w * jacobians[k];
  }
  // Symmetrize against accumulation round-off.
  return 0.5 * (info + info.transpose());
}

/// Covariance as the inverse of the information matrix, via Cholesky.
/// Returns nullopt when the information is not positive definite.
inline std::optional<Matrix6d> pose_covariance(const Matrix6d& fisher) {
  const Eigen::LLT<Matrix6d> llt(fisher);
  if (llt.info() != Eigen::Success) return std::nullopt;
  Matrix6d cov = llt.solve(Matrix6d::Identity());
  return 0.5 * (cov + cov.transpose());
}

/// ln det of an SPD matrix through its Cholesky factor.
inline std::optional<double> log_det_spd(
    const Eigen::Ref<const Eigen::MatrixXd>& m) {
  const Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) return std::nullopt;
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

/// Negative pose entropy: ln det of the information matrix. Computed from the
/// Cholesky factor, never by inverting. Throws if the matrix is not positive
/// definite.
inline double negative_entropy(const Matrix6d& fisher) {
  const auto ld = log_det_spd(fisher);
  if (!ld) {
    throw std::domain_error(
        "negative_entropy: information matrix is not positive definite");
  }
  return *ld;
}

/// Differential entropy of an m-dimensional Gaussian with covariance cov:
/// 0.5 m (1 + ln 2 pi) + 0.5 ln |cov|.
inline double differential_entropy(
    const Eigen::Ref<const Eigen::MatrixXd>& cov) {
  if (cov.rows() != cov.cols()) {
    throw std::invalid_argument("differential_entropy: matrix must be square");
  }
  const auto ld = log_det_spd(cov);
  if (!ld) {
    throw std::domain_error(
        "differential_entropy: covariance is not positive definite");
  }
  const double m = static_cast<double>(cov.rows());
  return 0.5 * m * (1.0 + std::log(2.0 * M_PI)) + 0.5 * (*ld);
}

}  // namespace argus
