// Copyright 2026 The aerialq Authors
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

#include <span>
#include <vector>

#include "aerialq/geometry.hpp"
#include "aerialq/rng.hpp"

namespace aerialq {

enum class BoundaryPolicy { kReflect, kWrap };

struct MobilityParams {
    double c_max = 1.3;       // m/s
    double hold_time = 10.0;  // s between (speed, direction) redraws
    BoundaryPolicy boundary = BoundaryPolicy::kReflect;

    void validate() const;
};

/// Random-walk pedestrian. Speed and direction hold for `hold_remaining`
/// more seconds before the next redraw.
struct User {
    int id = 0;
    Position2D pos;
    double speed = 0.0;
    double direction = 0.0;  // radians in [0, 2pi)
    double hold_remaining = 0.0;
};

/// Fresh users at `positions`, each with an initial draw and a full hold timer.
[[nodiscard]] std::vector<User> spawn_users(std::span<const Position2D> positions, const MobilityParams& params,
                                            RandomStream& rng);

/// Draws a new (speed, direction) pair and resets the hold timer.
void redraw(User& user, const MobilityParams& params, RandomStream& rng);

/// Advances every user by `dt` seconds. Redraws happen exactly when a hold
/// timer expires, even mid-step, so trajectories do not depend on `dt`.
/// Users are processed in order and draw from `rng` in that order.
[[nodiscard]] std::vector<User> step(std::span<const User> users, double dt, const MobilityParams& params,
                                     const ServiceArea& area, RandomStream& rng);

[[nodiscard]] std::vector<Position2D> positions_of(std::span<const User> users);

}  // namespace aerialq
