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
#include <string>

#include <Eigen/Core>

#include "argus/core/types.hpp"

namespace argus {

enum class CameraKind {
  kPinhole,
  kPinholeEquidistant,  // Kannala-Brandt equidistant distortion, k1..k4
};

/// Central projection camera: plain pinhole or pinhole with equidistant
/// (fisheye) distortion. Pixel coordinates are continuous; in-bounds means
/// u in [0, width) x [0, height).
class CameraModel {
 public:
  CameraModel() = default;

  CameraModel(CameraKind kind, double fx, double fy, double cx, double cy,
              int width, int height,
              const Vector4d& distortion = Vector4d::Zero())
      : kind_(kind),
        fx_(fx),
        fy_(fy),
        cx_(cx),
        cy_(cy),
        width_(width),
        height_(height),
        distortion_(distortion) {
    if (!(fx > 0.0) || !(fy > 0.0)) {
      throw std::invalid_argument("CameraModel: focal lengths must be positive");
    }
    if (!(cx >= 0.0 && cx < width) || !(cy >= 0.0 && cy < height)) {
      throw std::invalid_argument(
          "CameraModel: principal point must lie inside the image");
    }
  }

  static CameraModel pinhole(double fx, double fy, double cx, double cy,
                             int width, int height) {
    return CameraModel(CameraKind::kPinhole, fx, fy, cx, cy, width, height);
  }

  static CameraModel equidistant(double fx, double fy, double cx, double cy,
                                 int width, int height, const Vector4d& k) {
    return CameraModel(CameraKind::kPinholeEquidistant, fx, fy, cx, cy, width,
                       height, k);
  }

  CameraKind kind() const { return kind_; }
  double fx() const { return fx_; }
  double fy() const { return fy_; }
  double cx() const { return cx_; }
  double cy() const { return cy_; }
  int width() const { return width_; }
  int height() const { return height_; }
  const Vector4d& distortion() const { return distortion_; }

  bool in_bounds(const Vector2d& pixel) const {
    return pixel.x() >= 0.0 && pixel.x() < width_ && pixel.y() >= 0.0 &&
           pixel.y() < height_;
  }

  /// Projects a camera-frame point. Returns the pixel only when the point has
  /// positive depth and lands inside the image; out-of-view otherwise.
  std::optional<Vector2d> project(const Vector3d& p_cam) const {
    if (!p_cam.allFinite()) {
      throw std::invalid_argument("project: non-finite input point");
    }
    Vector2d pixel;
    if (!project_unbounded(p_cam, &pixel)) return std::nullopt;
    if (!in_bounds(pixel)) return std::nullopt;
    return pixel;
  }

  /// Projection without the image-bounds check; needed by the estimator where
  /// a predicted pixel slightly outside the image must still yield a residual.
  /// Returns false for points at or behind the camera plane. The optional
  /// jacobian is d(pixel)/d(p_cam), 2x3, evaluated analytically.
  bool project_unbounded(const Vector3d& p_cam, Vector2d* pixel,
                         Matrix23d* jacobian = nullptr) const {
    const double x = p_cam.x(), y = p_cam.y(), z = p_cam.z();
    if (!(z > 0.0)) return false;

    if (kind_ == CameraKind::kPinhole) {
      const double inv_z = 1.0 / z;
      (*pixel) << fx_ * x * inv_z + cx_, fy_ * y * inv_z + cy_;
      if (jacobian) {
        // clang-format off
        (*jacobian) << fx_ * inv_z, 0.0,          -fx_ * x * inv_z * inv_z,
                       0.0,         fy_ * inv_z,  -fy_ * y * inv_z * inv_z;
        // clang-format on
      }
      return true;
    }

    // Equidistant: u = f * theta_d * (x, y) / r with theta = atan2(r, z).
    const double r_sq = x * x + y * y;
    const double r = std::sqrt(r_sq);
    if (r < 1e-12) {
      // On-axis limit behaves like a pinhole with unit distortion gain.
      const double inv_z = 1.0 / z;
      (*pixel) << fx_ * x * inv_z + cx_, fy_ * y * inv_z + cy_;
      if (jacobian) {
        (*jacobian) << fx_ * inv_z, 0.0, 0.0, 0.0, fy_ * inv_z, 0.0;
      }
      return true;
    }

    const double theta = std::atan2(r, z);
    const double theta_d = distort_angle(theta);
    const double scale = theta_d / r;
    (*pixel) << fx_ * scale * x + cx_, fy_ * scale * y + cy_;

    if (jacobian) {
      const double norm_sq = r_sq + z * z;
      // d(theta)/d(x,y,z)
      const Vector3d dtheta(z * x / (norm_sq * r), z * y / (norm_sq * r),
                            -r / norm_sq);
      const double dtheta_d = distort_angle_deriv(theta);
      // d(scale)/dp = (theta_d' * dtheta * r - theta_d * dr) / r^2
      const Vector3d dr(x / r, y / r, 0.0);
      const Vector3d dscale =
          (dtheta_d * dtheta * r - theta_d * dr) / r_sq;
      jacobian->row(0) =
          fx_ * (scale * Vector3d::UnitX() + x * dscale).transpose();
      jacobian->row(1) =
          fy_ * (scale * Vector3d::UnitY() + y * dscale).transpose();
    }
    return true;
  }

  /// Back-projects pixel u to the camera-frame point with third component
  /// exactly z. Throws for non-positive depth.
  Vector3d backproject(const Vector2d& pixel, double z) const {
    if (!(z > 0.0)) {
      throw std::invalid_argument("backproject: depth must be positive");
    }
    const Vector3d ray = unit_plane_ray(pixel);
    return Vector3d(ray.x() * z, ray.y() * z, z);
  }

  /// Ray through the pixel, scaled so the third component equals 1.
  Vector3d unit_plane_ray(const Vector2d& pixel) const {
    const double mx = (pixel.x() - cx_) / fx_;
    const double my = (pixel.y() - cy_) / fy_;
    if (kind_ == CameraKind::kPinhole) return Vector3d(mx, my, 1.0);

    const double theta_d = std::sqrt(mx * mx + my * my);
    if (theta_d < 1e-12) return Vector3d(mx, my, 1.0);
    const double theta = undistort_angle(theta_d);
    const double tan_theta = std::tan(theta);
    return Vector3d(tan_theta * mx / theta_d, tan_theta * my / theta_d, 1.0);
  }

  Vector3d bearing(const Vector2d& pixel) const {
    return unit_plane_ray(pixel).normalized();
  }

 private:
  double distort_angle(double theta) const {
    const double t2 = theta * theta;
    return theta * (1.0 + t2 * (distortion_[0] +
                                t2 * (distortion_[1] +
                                      t2 * (distortion_[2] +
                                            t2 * distortion_[3]))));
  }

  double distort_angle_deriv(double theta) const {
    const double t2 = theta * theta;
    return 1.0 + t2 * (3.0 * distortion_[0] +
                       t2 * (5.0 * distortion_[1] +
                             t2 * (7.0 * distortion_[2] +
                                   t2 * 9.0 * distortion_[3])));
  }

  /// Inverts theta_d = theta * (1 + k1 theta^2 + ...) by Newton iteration.
  double undistort_angle(double theta_d) const {
    double theta = theta_d;
    for (int i = 0; i < 10; ++i) {
      const double f = distort_angle(theta) - theta_d;
      const double df = distort_angle_deriv(theta);
      const double step = f / df;
      theta -= step;
      if (std::abs(step) < 1e-14) break;
    }
    return theta;
  }

  CameraKind kind_ = CameraKind::kPinhole;
  double fx_ = 1.0, fy_ = 1.0, cx_ = 0.0, cy_ = 0.0;
  int width_ = 0, height_ = 0;
  Vector4d distortion_ = Vector4d::Zero();
};

inline std::string to_string(CameraKind kind) {
  return kind == CameraKind::kPinhole ? "pinhole" : "pinhole-equidistant";
}

}  // namespace argus
