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

#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "aerialq/oracle.hpp"
#include "aerialq/scenario.hpp"

namespace aerialq {
namespace {

const ServiceArea kArea = ServiceArea::square(4.0e6, 25.0, 525.0);

NetworkState snapshot(std::uint64_t seed) {
    ScenarioConfig cfg = desk_preset();
    cfg.seed = seed;
    cfg.n_users = 40;
    const Deployment d = deploy(cfg);
    return make_state(cfg, d.ground, positions_of(d.users), std::nullopt);
}

TEST(OracleTest, SingleStateGrid) {
    const PlacementGrid g(kArea, 1, 1, 1);
    const OracleResult r = exhaustive_search(snapshot(1), g);
    EXPECT_EQ(r.best_state, 0u);
    ASSERT_EQ(r.qos_per_state.size(), 1u);
    EXPECT_EQ(r.best_qos, r.qos_per_state[0]);
}

TEST(OracleTest, LoneUserPullsAerialOverheadAtLowestAltitude) {
    // No active ground site: the aerial BS serves alone and SINR is set by
    // path loss, which is smallest straight above the user at h_min.
    NetworkState st;
    st.ground_bs = {GroundBS{0, {0, 0, 25}, 46, false}};
    st.users = {{1500, 500}};
    const PlacementGrid g(kArea, 5, 5, 3);
    const OracleResult r = exhaustive_search(st, g);
    EXPECT_EQ(g.position(r.best_state), (Position3D{1500, 500, 25}));
}

TEST(OracleTest, BestDominatesAndMatchesIndependentScores) {
    const NetworkState snap = snapshot(2);
    const PlacementGrid g(kArea, 5, 5, 3);
    const OracleResult r = exhaustive_search(snap, g);
    ASSERT_EQ(r.qos_per_state.size(), g.size());
    for (std::size_t s = 0; s < g.size(); ++s) {
        NetworkState probe = snap;
        probe.aerial_pos = g.position(s);
        EXPECT_EQ(r.qos_per_state[s], aggregate_qos(probe)) << s;
        EXPECT_GE(r.best_qos, r.qos_per_state[s]);
        if (r.qos_per_state[s] == r.best_qos) EXPECT_GE(s, r.best_state);
    }
}

TEST(OracleTest, ThreadCountDoesNotChangeTheAnswer) {
    const NetworkState snap = snapshot(3);
    const PlacementGrid g(kArea, 6, 5, 3);
    const OracleResult one = exhaustive_search(snap, g, 1);
    for (unsigned t : {2u, 3u, 7u}) {
        const OracleResult many = exhaustive_search(snap, g, t);
        EXPECT_EQ(many.best_state, one.best_state);
        EXPECT_EQ(many.qos_per_state, one.qos_per_state);
    }
}

TEST(OracleTest, CsvHasOneRowPerState) {
    const PlacementGrid g(kArea, 2, 2, 1);
    const OracleResult r = exhaustive_search(snapshot(4), g);
    std::ostringstream out;
    write_oracle_csv(out, r, g);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "state,x,y,h,qos");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 4);
}

TEST(OracleTest, OracleAtRespectsStateCap) {
    ScenarioConfig cfg = desk_preset();
    cfg.oracle_max_states = 10;
    EXPECT_THROW((void)oracle_at(cfg, 0.0), ConfigError);
}

}  // namespace
}  // namespace aerialq
