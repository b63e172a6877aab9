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

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "argus/core/types.hpp"

namespace argus {

inline Matrix3d skew(const Vector3d& v) {
  Matrix3d m;
  // clang-format off
  m <<    0.0, -v.z(),  v.y(),
        v.z(),    0.0, -v.x(),
       -v.y(),  v.x(),    0.0;
  // clang-format on
  return m;
}

/// Rigid-body transform on SE(3), stored as unit quaternion plus translation.
///
/// Quaternion coefficients are ordered scalar-first [w, x, y, z] everywhere a
/// transform crosses an interface (files, CSV columns). Naming convention for
/// variables of this type: T_a_b maps points expressed in frame b to frame a,
/// i.e. p_a = T_a_b * p_b.
///
/// Tangent vectors are 6d [translation, rotation] and attach on the left:
/// perturb(delta, T) = exp(delta) * T.
class RigidTransform {
 public:
  RigidTransform()
      : rotation_(Eigen::Quaterniond::Identity()),
        translation_(Vector3d::Zero()) {}

  RigidTransform(const Eigen::Quaterniond& rotation,
                 const Vector3d& translation)
      : rotation_(rotation.normalized()), translation_(translation) {}

  RigidTransform(const Matrix3d& rotation, const Vector3d& translation)
      : rotation_(Eigen::Quaterniond(rotation).normalized()),
        translation_(translation) {}

  static RigidTransform identity() { return RigidTransform(); }

  const Eigen::Quaterniond& rotation() const { return rotation_; }
  const Vector3d& translation() const { return translation_; }
  Matrix3d rotation_matrix() const { return rotation_.toRotationMatrix(); }

  /// p_a = T_a_b * p_b
  Vector3d operator*(const Vector3d& p) const {
    return rotation_ * p + translation_;
  }

  /// T_a_c = T_a_b * T_b_c
  RigidTransform operator*(const RigidTransform& other) const {
    return RigidTransform(rotation_ * other.rotation_,
                          rotation_ * other.translation_ + translation_);
  }

  RigidTransform inverse() const {
    const Eigen::Quaterniond q_inv = rotation_.conjugate();
    return RigidTransform(q_inv, -(q_inv * translation_));
  }

  /// SE(3) exponential map; tangent is [translation, rotation].
  static RigidTransform exp(const Vector6d& tangent) {
    const Vector3d rho = tangent.head<3>();
    const Vector3d phi = tangent.tail<3>();
    const double theta_sq = phi.squaredNorm();
    const double theta = std::sqrt(theta_sq);

    Eigen::Quaterniond q;
    Matrix3d v;
    const Matrix3d phi_hat = skew(phi);
    if (theta_sq < 1e-14) {
      q = Eigen::Quaterniond(1.0, 0.5 * phi.x(), 0.5 * phi.y(), 0.5 * phi.z());
      q.normalize();
      v = Matrix3d::Identity() + 0.5 * phi_hat + phi_hat * phi_hat / 6.0;
    } else {
      q = Eigen::Quaterniond(Eigen::AngleAxisd(theta, phi / theta));
      v = Matrix3d::Identity() + ((1.0 - std::cos(theta)) / theta_sq) * phi_hat +
          ((theta - std::sin(theta)) / (theta_sq * theta)) * phi_hat * phi_hat;
    }
    return RigidTransform(q, v * rho);
  }

  /// SE(3) logarithm, inverse of exp().
  Vector6d log() const {
    const Vector3d phi = rotation_log();
    const double theta_sq = phi.squaredNorm();
    const double theta = std::sqrt(theta_sq);
    const Matrix3d phi_hat = skew(phi);

    Matrix3d v_inv;
    if (theta_sq < 1e-14) {
      v_inv = Matrix3d::Identity() - 0.5 * phi_hat +
              phi_hat * phi_hat / 12.0;
    } else {
      const double half_theta = 0.5 * theta;
      const double cot_coeff =
          (1.0 - half_theta * std::cos(half_theta) / std::sin(half_theta)) /
          theta_sq;
      v_inv = Matrix3d::Identity() - 0.5 * phi_hat +
              cot_coeff * phi_hat * phi_hat;
    }

    Vector6d tangent;
    tangent.head<3>() = v_inv * translation_;
    tangent.tail<3>() = phi;
    return tangent;
  }

  /// Rotation-vector (axis * angle) of the rotation part.
  Vector3d rotation_log() const {
    Eigen::Quaterniond q = rotation_;
    if (q.w() < 0.0) q.coeffs() *= -1.0;
    const Vector3d vec = q.vec();
    const double vec_norm = vec.norm();
    if (vec_norm < 1e-12) {
      return 2.0 / q.w() * vec * (1.0 - vec_norm * vec_norm / (3.0 * q.w() * q.w()));
    }
    const double angle = 2.0 * std::atan2(vec_norm, q.w());
    return angle / vec_norm * vec;
  }

  double rotation_angle() const { return rotation_log().norm(); }

  bool is_finite() const {
    return translation_.allFinite() && rotation_.coeffs().allFinite();
  }

 private:
  Eigen::Quaterniond rotation_;
  Vector3d translation_;
};

inline Vector3d transform_point(const RigidTransform& t, const Vector3d& p) {
  return t * p;
}

/// Left-multiplicative retraction used by the pose estimator.
inline RigidTransform perturb(const Vector6d& delta, const RigidTransform& t) {
  return RigidTransform::exp(delta) * t;
}

}  // namespace argus
