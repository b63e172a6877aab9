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

#include <set>

#include "argus/core/types.hpp"

namespace argus {

/// A 3D map point in the world frame.
struct Landmark {
  LandmarkId id = -1;
  Vector3d position = Vector3d::Zero();
  std::set<FrameId> observing_keyframes;
};

}  // namespace argus
