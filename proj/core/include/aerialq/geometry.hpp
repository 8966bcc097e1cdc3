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

#include <cmath>
#include <stdexcept>
#include <string>

namespace aerialq {

/// Raised for configurations that cannot be simulated (bad bounds, empty
/// grids, layouts that do not fit the area).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a link has zero length and path loss is undefined.
class GeometryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised for file-system failures; the message carries the offending path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Position2D {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Position2D&, const Position2D&) = default;
};

/// `h` is height above ground in meters.
struct Position3D {
    double x = 0.0;
    double y = 0.0;
    double h = 0.0;

    [[nodiscard]] Position2D ground() const { return {x, y}; }

    friend bool operator==(const Position3D&, const Position3D&) = default;
};

[[nodiscard]] inline double horizontal_distance(const Position2D& a, const Position2D& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

[[nodiscard]] inline double distance_3d(const Position3D& a, const Position3D& b) {
    return std::hypot(horizontal_distance(a.ground(), b.ground()), a.h - b.h);
}

/// Rectangular service region plus the altitude band the aerial BS may use.
struct ServiceArea {
    double x_min = 0.0;
    double x_max = 2000.0;
    double y_min = 0.0;
    double y_max = 2000.0;
    double h_min = 25.0;
    double h_max = 525.0;

    [[nodiscard]] double width() const { return x_max - x_min; }
    [[nodiscard]] double depth() const { return y_max - y_min; }
    [[nodiscard]] double area() const { return width() * depth(); }
    [[nodiscard]] Position2D center() const { return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max)}; }

    [[nodiscard]] bool contains(const Position2D& p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }
    [[nodiscard]] bool contains(const Position3D& p) const {
        return contains(p.ground()) && p.h >= h_min && p.h <= h_max;
    }

    /// Throws ConfigError unless the bounds are finite and ordered with 0 < h_min < h_max.
    void validate() const;

    /// Square area of the given total size centered on the origin quadrant
    /// (x, y start at 0).
    [[nodiscard]] static ServiceArea square(double total_area_m2, double h_min, double h_max);

    friend bool operator==(const ServiceArea&, const ServiceArea&) = default;
};

}  // namespace aerialq
