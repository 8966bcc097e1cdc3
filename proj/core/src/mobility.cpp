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

#include "aerialq/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace aerialq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Timer residue below this counts as expired (absorbs dt round-off).
constexpr double kTimerEps = 1e-9;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    // fmod of a value just below 0 can land exactly on 2pi after the shift.
    return a >= kTwoPi ? 0.0 : a;
}

// Folds `v` back into [lo, hi]; returns true if an odd number of bounces occurred.
bool reflect(double& v, double lo, double hi) {
    bool flipped = false;
    while (v < lo || v > hi) {
        v = v < lo ? 2.0 * lo - v : 2.0 * hi - v;
        flipped = !flipped;
    }
    return flipped;
}

double wrap(double v, double lo, double hi) {
    const double w = hi - lo;
    double t = std::fmod(v - lo, w);
    if (t < 0.0) t += w;
    return lo + t;
}

void advance(User& u, double duration, const MobilityParams& params, const ServiceArea& area) {
    if (u.speed == 0.0 || duration == 0.0) return;
    double x = u.pos.x + u.speed * duration * std::cos(u.direction);
    double y = u.pos.y + u.speed * duration * std::sin(u.direction);
    if (params.boundary == BoundaryPolicy::kReflect) {
        const bool fx = reflect(x, area.x_min, area.x_max);
        const bool fy = reflect(y, area.y_min, area.y_max);
        double dir = u.direction;
        if (fx) dir = std::numbers::pi - dir;
        if (fy) dir = -dir;
        u.direction = wrap_angle(dir);
    } else {
        x = wrap(x, area.x_min, area.x_max);
        y = wrap(y, area.y_min, area.y_max);
    }
    u.pos = {x, y};
}

}  // namespace

void MobilityParams::validate() const {
    if (!(c_max >= 0.0) || !std::isfinite(c_max)) throw ConfigError("c_max must be non-negative");
    if (!(hold_time > 0.0) || !std::isfinite(hold_time)) throw ConfigError("hold_time must be positive");
}

void redraw(User& user, const MobilityParams& params, RandomStream& rng) {
    user.speed = rng.uniform(0.0, params.c_max);
    user.direction = rng.uniform(0.0, kTwoPi);
    user.hold_remaining = params.hold_time;
}

std::vector<User> spawn_users(std::span<const Position2D> positions, const MobilityParams& params,
                              RandomStream& rng) {
    std::vector<User> out;
    out.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        User u;
        u.id = static_cast<int>(i);
        u.pos = positions[i];
        redraw(u, params, rng);
        out.push_back(u);
    }
    return out;
}

std::vector<User> step(std::span<const User> users, double dt, const MobilityParams& params, const ServiceArea& area,
                       RandomStream& rng) {
    if (!(dt > 0.0)) throw ConfigError("mobility step requires dt > 0");
    std::vector<User> out(users.begin(), users.end());
    for (auto& u : out) {
        double left = dt;
        while (left > kTimerEps) {
            const double seg = std::min(left, u.hold_remaining);
            advance(u, seg, params, area);
            left -= seg;
            u.hold_remaining -= seg;
            if (u.hold_remaining <= kTimerEps) redraw(u, params, rng);
        }
    }
    return out;
}

std::vector<Position2D> positions_of(std::span<const User> users) {
    std::vector<Position2D> out;
    out.reserve(users.size());
    for (const auto& u : users) out.push_back(u.pos);
    return out;
}

}  // namespace aerialq
