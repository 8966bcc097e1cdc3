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

#include <cstddef>
#include <vector>

#include "aerialq/geometry.hpp"
#include "aerialq/rng.hpp"

namespace aerialq {

struct GroundBS {
    int id = 0;
    Position3D pos;
    double tx_power_dbm = 46.0;
    bool active = true;
};

/// Integer lattice coordinates of a placement-grid state.
struct GridCoord {
    std::size_t ix = 0;
    std::size_t iy = 0;
    std::size_t ih = 0;

    friend bool operator==(const GridCoord&, const GridCoord&) = default;
};

/// Discrete candidate positions for the aerial BS.
///
/// Axis points are evenly spaced and include both bounds; an axis with a
/// single point sits at its lower bound. States are numbered x-fastest:
/// s = ix + n_x * (iy + n_y * ih).
class PlacementGrid {
public:
    PlacementGrid(const ServiceArea& area, std::size_t n_x, std::size_t n_y, std::size_t n_h);

    [[nodiscard]] const ServiceArea& area() const { return area_; }
    [[nodiscard]] std::size_t n_x() const { return n_x_; }
    [[nodiscard]] std::size_t n_y() const { return n_y_; }
    [[nodiscard]] std::size_t n_h() const { return n_h_; }
    [[nodiscard]] std::size_t size() const { return n_x_ * n_y_ * n_h_; }

    [[nodiscard]] GridCoord coord(std::size_t s) const;
    [[nodiscard]] std::size_t index(const GridCoord& c) const;

    /// Throws std::out_of_range for s >= size().
    [[nodiscard]] Position3D position(std::size_t s) const;

    /// Nearest grid state to `p`. Throws std::out_of_range if `p` lies
    /// outside the grid box.
    [[nodiscard]] std::size_t index_of(const Position3D& p) const;

    /// Spacing between neighbouring points on each axis (0 for single-point axes).
    [[nodiscard]] Position3D spacing() const;

private:
    ServiceArea area_;
    std::size_t n_x_;
    std::size_t n_y_;
    std::size_t n_h_;
};

/// Hexagonal macro layout: the center site plus `n_rings` rings, 1 + 3n(n+1)
/// sites in total, ordered center first then ring by ring.
///
/// The inter-site distance is sqrt(2 A_cell / sqrt(3)) with A_cell the area
/// per site, reduced when necessary so the outer ring stays inside `area`.
[[nodiscard]] std::vector<GroundBS> hex_layout(int n_rings, const ServiceArea& area,
                                               double antenna_height_m, double tx_power_dbm = 46.0);

/// Inter-site distance hex_layout would use for this configuration.
[[nodiscard]] double hex_inter_site_distance(int n_rings, const ServiceArea& area);

/// Binomial point process: `count` i.i.d. uniform drops over the 2D area
/// (a Poisson process conditioned on its number of points).
[[nodiscard]] std::vector<Position2D> drop_users_ppp(std::size_t count, const ServiceArea& area,
                                                     RandomStream& rng);

}  // namespace aerialq
