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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "aerialq/deployment.hpp"
#include "support/stats.hpp"

namespace aerialq {
namespace {

ServiceArea four_km2() { return ServiceArea::square(4.0e6, 25.0, 525.0); }

TEST(HexLayoutTest, SingleCellSitsAtAreaCenter) {
    const auto bs = hex_layout(0, four_km2(), 25.0);
    ASSERT_EQ(bs.size(), 1u);
    EXPECT_DOUBLE_EQ(bs[0].pos.x, 1000.0);
    EXPECT_DOUBLE_EQ(bs[0].pos.y, 1000.0);
    EXPECT_DOUBLE_EQ(bs[0].pos.h, 25.0);
}

TEST(HexLayoutTest, TwoRingsGiveNineteenSites) {
    const auto area = four_km2();
    const auto bs = hex_layout(2, area, 25.0);
    ASSERT_EQ(bs.size(), 19u);
    for (std::size_t j = 0; j < bs.size(); ++j) {
        EXPECT_EQ(bs[j].id, static_cast<int>(j));
        EXPECT_TRUE(area.contains(bs[j].pos.ground())) << j;
        EXPECT_TRUE(bs[j].active);
    }
}

TEST(HexLayoutTest, SiteCountFormula) {
    const auto area = ServiceArea::square(1.0e8, 25.0, 525.0);
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(hex_layout(n, area, 25.0).size(), static_cast<std::size_t>(1 + 3 * n * (n + 1)));
}

TEST(HexLayoutTest, OneRingNearestNeighbourDistancesAreEqual) {
    const auto bs = hex_layout(1, four_km2(), 25.0);
    ASSERT_EQ(bs.size(), 7u);
    std::vector<double> nearest;
    for (const auto& a : bs) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& b : bs) {
            if (a.id != b.id) best = std::min(best, horizontal_distance(a.pos.ground(), b.pos.ground()));
        }
        nearest.push_back(best);
    }
    for (double d : nearest) EXPECT_NEAR(d, nearest.front(), 1e-9);
    // ISD from the tessellation: sqrt(2 * (4e6 / 7) / sqrt(3)).
    EXPECT_NEAR(nearest.front(), std::sqrt(2.0 * (4.0e6 / 7.0) / std::numbers::sqrt3), 1e-9);
}

TEST(HexLayoutTest, SixtyDegreeRotationPermutesSites) {
    const auto area = four_km2();
    const auto bs = hex_layout(2, area, 25.0);
    const Position2D c = area.center();
    const double cs = std::cos(std::numbers::pi / 3.0);
    const double sn = std::sin(std::numbers::pi / 3.0);
    for (const auto& b : bs) {
        const double dx = b.pos.x - c.x;
        const double dy = b.pos.y - c.y;
        const Position2D rotated{c.x + cs * dx - sn * dy, c.y + sn * dx + cs * dy};
        const bool found = std::any_of(bs.begin(), bs.end(), [&](const GroundBS& o) {
            return horizontal_distance(o.pos.ground(), rotated) < 1e-6;
        });
        EXPECT_TRUE(found) << "site " << b.id << " has no rotated image";
    }
}

TEST(HexLayoutTest, OuterRingIsShrunkToFit) {
    const auto area = four_km2();
    const auto bs = hex_layout(3, area, 25.0);
    EXPECT_EQ(bs.size(), 37u);
    for (const auto& b : bs) EXPECT_TRUE(area.contains(b.pos.ground())) << b.id;
}

TEST(HexLayoutTest, RejectsBadInputs) {
    EXPECT_THROW((void)hex_layout(-1, four_km2(), 25.0), ConfigError);
    EXPECT_THROW((void)hex_layout(1, four_km2(), 0.0), ConfigError);
    ServiceArea degenerate = four_km2();
    degenerate.x_max = degenerate.x_min;
    EXPECT_THROW((void)hex_layout(1, degenerate, 25.0), ConfigError);
}

TEST(ServiceAreaTest, ValidateChecksOrdering) {
    EXPECT_NO_THROW(four_km2().validate());
    ServiceArea a = four_km2();
    a.h_min = 0.0;
    EXPECT_THROW(a.validate(), ConfigError);
    a = four_km2();
    a.h_max = a.h_min;
    EXPECT_THROW(a.validate(), ConfigError);
    EXPECT_DOUBLE_EQ(four_km2().area(), 4.0e6);
}

TEST(UserDropTest, ZeroUsers) {
    RandomStream rng(1);
    EXPECT_TRUE(drop_users_ppp(0, four_km2(), rng).empty());
}

TEST(UserDropTest, UsersStayInsideArea) {
    RandomStream rng(7);
    const auto area = four_km2();
    const auto users = drop_users_ppp(150, area, rng);
    ASSERT_EQ(users.size(), 150u);
    for (const auto& u : users) EXPECT_TRUE(area.contains(u));
}

TEST(UserDropTest, QuadrantCountsPassChiSquare) {
    RandomStream rng(2024);
    const auto area = four_km2();
    const auto users = drop_users_ppp(10000, area, rng);
    std::vector<double> counts(4, 0.0);
    const Position2D c = area.center();
    for (const auto& u : users) counts[(u.x >= c.x ? 1 : 0) + (u.y >= c.y ? 2 : 0)] += 1.0;
    const std::vector<double> expected(4, 2500.0);
    EXPECT_LT(testing::chi_square(counts, expected), testing::kChiSquare3Dof99);
}

TEST(UserDropTest, FixedSeedIsBitReproducible) {
    RandomStream a(99);
    RandomStream b(99);
    EXPECT_EQ(drop_users_ppp(500, four_km2(), a), drop_users_ppp(500, four_km2(), b));
}

TEST(PlacementGridTest, CornerConventions) {
    const PlacementGrid g(four_km2(), 2, 2, 2);
    EXPECT_EQ(g.position(0), (Position3D{0.0, 0.0, 25.0}));
    EXPECT_EQ(g.position(7), (Position3D{2000.0, 2000.0, 525.0}));
    EXPECT_THROW((void)g.position(8), std::out_of_range);
}

TEST(PlacementGridTest, RoundTripIsIdentityForEveryState) {
    const PlacementGrid g(four_km2(), 21, 21, 11);
    ASSERT_EQ(g.size(), 4851u);
    for (std::size_t s = 0; s < g.size(); ++s) {
        const Position3D p = g.position(s);
        ASSERT_EQ(g.index_of(p), s);
        ASSERT_TRUE(g.area().contains(p)) << s;
    }
}

TEST(PlacementGridTest, SinglePointAxesAndErrors) {
    const PlacementGrid g(four_km2(), 1, 1, 1);
    EXPECT_EQ(g.size(), 1u);
    EXPECT_EQ(g.position(0), (Position3D{0.0, 0.0, 25.0}));
    EXPECT_THROW(PlacementGrid(four_km2(), 0, 1, 1), ConfigError);
    EXPECT_THROW((void)g.index_of({5000.0, 0.0, 25.0}), std::out_of_range);
}

}  // namespace
}  // namespace aerialq
