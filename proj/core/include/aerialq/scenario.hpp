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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "aerialq/channel.hpp"
#include "aerialq/deployment.hpp"
#include "aerialq/mobility.hpp"
#include "aerialq/oracle.hpp"
#include "aerialq/placement.hpp"
#include "aerialq/radio.hpp"

namespace aerialq {

enum class BaselineMode {
    /// Full ground network, no aerial BS.
    kGround,
    /// One ground BS switched off and replaced by the aerial BS.
    kAerial,
};

[[nodiscard]] std::string_view to_string(BaselineMode m);
[[nodiscard]] BaselineMode parse_baseline_mode(std::string_view s);

struct ScenarioConfig {
    std::uint64_t seed = 1;
    std::size_t n_users = 400;
    int n_rings = 2;
    ServiceArea area = ServiceArea::square(4.0e6, 25.0, 525.0);
    std::size_t grid_x = 21;
    std::size_t grid_y = 21;
    std::size_t grid_h = 11;

    double ground_antenna_height_m = 25.0;
    double ground_tx_power_dbm = 46.0;
    double aerial_tx_power_dbm = 36.0;

    AtgEnvironment env;
    RadioParams radio;
    MobilityParams mobility;
    double mobility_dt = 1.0;

    QTableParams qtable;
    LearningConfig learning;

    double t_min = 10.0;
    double sim_duration = 300.0;
    BaselineMode mode = BaselineMode::kAerial;
    /// Ground BS switched off in aerial mode; the center site by default.
    std::optional<int> disabled_bs = 0;

    /// Upper bound on grid size accepted by the exhaustive oracle.
    std::size_t oracle_max_states = 100'000;

    /// Throws ConfigError describing the first violated constraint.
    void validate() const;

    [[nodiscard]] PlacementGrid grid() const { return PlacementGrid(area, grid_x, grid_y, grid_h); }
    [[nodiscard]] std::size_t slot_count() const;
};

/// 19-site urban network with the full 21x21x11 placement grid.
[[nodiscard]] ScenarioConfig full_preset();
/// 7 sites, 100 users and a 5x5x3 grid: seconds per run.
[[nodiscard]] ScenarioConfig desk_preset();
[[nodiscard]] ScenarioConfig preset_by_name(std::string_view name);

[[nodiscard]] nlohmann::json to_json(const ScenarioConfig& cfg);
/// Overlays the keys present in `j` onto `cfg`. Unknown keys are rejected.
void apply_json(ScenarioConfig& cfg, const nlohmann::json& j);

struct TimeSlotRecord {
    double t = 0.0;
    double qos = 0.0;
    double qos_th = 0.0;
    std::optional<Position3D> aerial_pos;
    std::vector<double> sinr;  // linear, per user
    bool learning_triggered = false;
    /// Episodes until the learned placement stopped changing; 0 when not triggered.
    std::size_t episodes_used = 0;
};

struct ScenarioResult {
    double qos_th = 0.0;
    std::vector<TimeSlotRecord> records;
    /// Rewards of every learning step, all sessions concatenated.
    std::vector<double> reward_trace;
    std::size_t learning_sessions = 0;
    std::optional<QTable> q;
};

/// Ground network and initial user drop for a configuration, plus the
/// mobility stream positioned after the users' initial draws.
struct Deployment {
    std::vector<GroundBS> ground;
    std::vector<User> users;
    RandomStream mobility_rng;
};

[[nodiscard]] Deployment deploy(const ScenarioConfig& cfg);

/// Network snapshot from explicit parts; `ground` activity is used as given.
[[nodiscard]] NetworkState make_state(const ScenarioConfig& cfg, std::vector<GroundBS> ground,
                                      std::vector<Position2D> users, std::optional<Position3D> aerial);

/// Simulates the configured network slot by slot. In aerial mode the aerial
/// BS is re-placed by Q-learning whenever the full ground network, evaluated
/// at the slot's user positions, falls below the threshold it achieved at
/// t = 0. Recorded QoS is that of the configured network after any move.
/// `warm` seeds the first learning session's table.
[[nodiscard]] ScenarioResult run_scenario(const ScenarioConfig& cfg, std::optional<QTable> warm = std::nullopt);

/// Snapshot of the configured network after users have walked for `t`
/// seconds. In aerial mode the disabled site is off and the aerial BS is
/// left undeployed.
[[nodiscard]] NetworkState snapshot_at(const ScenarioConfig& cfg, double t);

/// Exhaustive placement map for snapshot_at(cfg, t). Throws ConfigError when
/// the grid exceeds cfg.oracle_max_states.
[[nodiscard]] OracleResult oracle_at(const ScenarioConfig& cfg, double t, unsigned threads = 1);

}  // namespace aerialq
