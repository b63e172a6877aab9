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

#include <Eigen/Dense>

#include "argus/geometry/camera.hpp"
#include "argus/geometry/transform.hpp"

namespace argus {

struct TriangulationOptions {
  double max_reprojection_px = 2.0;
  double min_ray_angle_rad = 1e-4;  // rejects zero-parallax geometry
};

struct Triangulation {
  Vector3d point_in_i;              // expressed in camera-i frame
  double mean_reprojection_px = 0;  // mean over the two views
  double ray_angle_rad = 0;
};

/// Linear two-view triangulation of a pixel correspondence (u_i, u_j).
/// T_cj_ci maps camera-i points into the camera-j frame. Fails (nullopt) on
/// insufficient parallax, negative depth in either view, or reprojection
/// error above the gate.
inline std::optional<Triangulation> triangulate_linear(
    const Vector2d& u_i, const Vector2d& u_j, const CameraModel& cam_i,
    const CameraModel& cam_j, const RigidTransform& T_cj_ci,
    const TriangulationOptions& opts = {}) {
  const Vector3d ray_i = cam_i.unit_plane_ray(u_i);
  const Vector3d ray_j = cam_j.unit_plane_ray(u_j);

  // Parallax between the two viewing rays in a common frame.
  const Vector3d ray_j_in_i = T_cj_ci.rotation().conjugate() * ray_j;
  const double cos_angle = ray_i.normalized().dot(ray_j_in_i.normalized());
  const double ray_angle = std::acos(std::min(1.0, std::max(-1.0, cos_angle)));
  if (ray_angle < opts.min_ray_angle_rad) return std::nullopt;

  // Rows of A x~ = 0 from a x (P x~) = 0 in each view, x~ homogeneous in the
  // camera-i frame. View i has P = [I | 0], view j has P = [R | t].
  Eigen::Matrix<double, 4, 4> a;
  a.row(0) << -1.0, 0.0, ray_i.x(), 0.0;
  a.row(1) << 0.0, -1.0, ray_i.y(), 0.0;
  const Matrix3d r = T_cj_ci.rotation_matrix();
  const Vector3d t = T_cj_ci.translation();
  a.row(2) << ray_j.x() * r.row(2) - r.row(0), ray_j.x() * t.z() - t.x();
  a.row(3) << ray_j.y() * r.row(2) - r.row(1), ray_j.y() * t.z() - t.y();

  const Eigen::JacobiSVD<Eigen::Matrix4d> svd(a, Eigen::ComputeFullV);
  const Vector4d x_h = svd.matrixV().col(3);
  if (std::abs(x_h[3]) < 1e-15) return std::nullopt;
  const Vector3d p_i = x_h.head<3>() / x_h[3];
  const Vector3d p_j = T_cj_ci * p_i;
  if (!(p_i.z() > 0.0) || !(p_j.z() > 0.0)) return std::nullopt;

  Vector2d proj_i, proj_j;
  if (!cam_i.project_unbounded(p_i, &proj_i) ||
      !cam_j.project_unbounded(p_j, &proj_j)) {
    return std::nullopt;
  }
  const double reproj =
      0.5 * ((proj_i - u_i).norm() + (proj_j - u_j).norm());
  if (reproj > opts.max_reprojection_px) return std::nullopt;

  return Triangulation{p_i, reproj, ray_angle};
}

}  // namespace argus
