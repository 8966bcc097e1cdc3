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

#include "aerialq/deployment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace aerialq {

void ServiceArea::validate() const {
    const bool finite = std::isfinite(x_min) && std::isfinite(x_max) && std::isfinite(y_min) &&
                        std::isfinite(y_max) && std::isfinite(h_min) && std::isfinite(h_max);
    if (!finite) throw ConfigError("service area bounds must be finite");
    if (!(x_min < x_max)) throw ConfigError("service area requires x_min < x_max");
    if (!(y_min < y_max)) throw ConfigError("service area requires y_min < y_max");
    if (!(0.0 < h_min && h_min < h_max)) throw ConfigError("service area requires 0 < h_min < h_max");
}

ServiceArea ServiceArea::square(double total_area_m2, double h_min, double h_max) {
    if (!(total_area_m2 > 0.0)) throw ConfigError("total area must be positive");
    const double side = std::sqrt(total_area_m2);
    ServiceArea a{0.0, side, 0.0, side, h_min, h_max};
    a.validate();
    return a;
}

namespace {

double axis_point(double lo, double hi, std::size_t n, std::size_t i) {
    if (n == 1) return lo;
    if (i + 1 == n) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

std::size_t nearest_axis_index(double lo, double hi, std::size_t n, double v) {
    if (n == 1) return 0;
    const double t = (v - lo) / (hi - lo) * static_cast<double>(n - 1);
    const auto i = static_cast<long long>(std::llround(t));
    return static_cast<std::size_t>(std::clamp<long long>(i, 0, static_cast<long long>(n - 1)));
}

}  // namespace

PlacementGrid::PlacementGrid(const ServiceArea& area, std::size_t n_x, std::size_t n_y, std::size_t n_h)
    : area_(area), n_x_(n_x), n_y_(n_y), n_h_(n_h) {
    area_.validate();
    if (n_x == 0 || n_y == 0 || n_h == 0) throw ConfigError("placement grid needs at least one point per axis");
}

GridCoord PlacementGrid::coord(std::size_t s) const {
    if (s >= size()) throw std::out_of_range("grid state " + std::to_string(s) + " out of range");
    return {s % n_x_, (s / n_x_) % n_y_, s / (n_x_ * n_y_)};
}

std::size_t PlacementGrid::index(const GridCoord& c) const {
    if (c.ix >= n_x_ || c.iy >= n_y_ || c.ih >= n_h_) throw std::out_of_range("grid coordinate out of range");
    return c.ix + n_x_ * (c.iy + n_y_ * c.ih);
}

Position3D PlacementGrid::position(std::size_t s) const {
    const GridCoord c = coord(s);
    return {axis_point(area_.x_min, area_.x_max, n_x_, c.ix), axis_point(area_.y_min, area_.y_max, n_y_, c.iy),
            axis_point(area_.h_min, area_.h_max, n_h_, c.ih)};
}

std::size_t PlacementGrid::index_of(const Position3D& p) const {
    if (!area_.contains(p)) throw std::out_of_range("position outside the placement grid");
    return index({nearest_axis_index(area_.x_min, area_.x_max, n_x_, p.x),
                  nearest_axis_index(area_.y_min, area_.y_max, n_y_, p.y),
                  nearest_axis_index(area_.h_min, area_.h_max, n_h_, p.h)});
}

Position3D PlacementGrid::spacing() const {
    auto step = [](double lo, double hi, std::size_t n) {
        return n == 1 ? 0.0 : (hi - lo) / static_cast<double>(n - 1);
    };
    return {step(area_.x_min, area_.x_max, n_x_), step(area_.y_min, area_.y_max, n_y_),
            step(area_.h_min, area_.h_max, n_h_)};
}

double hex_inter_site_distance(int n_rings, const ServiceArea& area) {
    if (n_rings < 0) throw ConfigError("n_rings must be non-negative");
    area.validate();
    const double cells = 1.0 + 3.0 * n_rings * (n_rings + 1);
    const double cell_area = area.area() / cells;
    double isd = std::sqrt(2.0 * cell_area / std::numbers::sqrt3);
    if (n_rings > 0) {
        // Outer ring corners reach n*isd along x and n*isd*sqrt(3)/2 along y.
        const double fit_x = 0.5 * area.width() / n_rings;
        const double fit_y = 0.5 * area.depth() / (n_rings * std::numbers::sqrt3 / 2.0);
        isd = std::min({isd, fit_x, fit_y});
    }
    if (!(isd > 0.0) || !std::isfinite(isd)) throw ConfigError("area too small for hexagonal layout");
    return isd;
}

std::vector<GroundBS> hex_layout(int n_rings, const ServiceArea& area, double antenna_height_m,
                                 double tx_power_dbm) {
    if (!(antenna_height_m > 0.0) || !std::isfinite(antenna_height_m))
        throw ConfigError("ground antenna height must be positive");
    if (!std::isfinite(tx_power_dbm)) throw ConfigError("ground tx power must be finite");
    const double isd = hex_inter_site_distance(n_rings, area);
    const Position2D c = area.center();

    // Axial hex coordinates (q, r); ring k holds the sites at hex distance k.
    std::vector<GroundBS> out;
    out.reserve(static_cast<std::size_t>(1 + 3 * n_rings * (n_rings + 1)));
    auto emit = [&](int q, int r) {
        const double x = c.x + isd * (q + 0.5 * r);
        const double y = c.y + isd * (std::numbers::sqrt3 / 2.0) * r;
        out.push_back({static_cast<int>(out.size()), {x, y, antenna_height_m}, tx_power_dbm, true});
    };
    emit(0, 0);
    static constexpr int kDirs[6][2] = {{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}};
    for (int k = 1; k <= n_rings; ++k) {
        // Start at (-k, k) direction corner and walk the six sides.
        int q = kDirs[4][0] * k;
        int r = kDirs[4][1] * k;
        for (const auto& d : kDirs) {
            for (int step = 0; step < k; ++step) {
                emit(q, r);
                q += d[0];
                r += d[1];
            }
        }
    }

    for (const auto& bs : out) {
        // Round-off can push an outer site a few ulps past the edge.
        constexpr double kSlack = 1e-9;
        if (bs.pos.x < area.x_min - kSlack || bs.pos.x > area.x_max + kSlack ||
            bs.pos.y < area.y_min - kSlack || bs.pos.y > area.y_max + kSlack)
            throw ConfigError("hexagonal layout does not fit inside the service area");
    }
    return out;
}

std::vector<Position2D> drop_users_ppp(std::size_t count, const ServiceArea& area, RandomStream& rng) {
    std::vector<Position2D> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double x = rng.uniform(area.x_min, area.x_max);
        const double y = rng.uniform(area.y_min, area.y_max);
        out.push_back({x, y});
    }
    return out;
}

}  // namespace aerialq
