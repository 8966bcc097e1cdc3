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

#include "aerialq/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aerialq {

std::string_view to_string(BaselineMode m) {
    return m == BaselineMode::kGround ? "ground19" : "aerial18plus1";
}

BaselineMode parse_baseline_mode(std::string_view s) {
    if (s == "ground19" || s == "ground") return BaselineMode::kGround;
    if (s == "aerial18plus1" || s == "aerial") return BaselineMode::kAerial;
    throw ConfigError("unknown baseline mode '" + std::string(s) + "'");
}

void ScenarioConfig::validate() const {
    area.validate();
    env.validate();
    radio.validate();
    mobility.validate();
    qtable.validate();
    learning.validate(qtable.epsilon);
    if (n_rings < 0) throw ConfigError("n_rings must be non-negative");
    if (grid_x == 0 || grid_y == 0 || grid_h == 0) throw ConfigError("grid counts must be positive");
    if (!(ground_antenna_height_m > 0.0)) throw ConfigError("ground antenna height must be positive");
    if (!std::isfinite(ground_tx_power_dbm) || !std::isfinite(aerial_tx_power_dbm))
        throw ConfigError("tx powers must be finite");
    if (!(mobility_dt > 0.0)) throw ConfigError("mobility dt must be positive");
    if (!(t_min > 0.0) || !std::isfinite(t_min)) throw ConfigError("t_min must be positive");
    if (!(sim_duration >= t_min) || !std::isfinite(sim_duration)) throw ConfigError("sim_duration must be >= t_min");
    const int sites = 1 + 3 * n_rings * (n_rings + 1);
    if (mode == BaselineMode::kAerial) {
        if (!disabled_bs) throw ConfigError("aerial mode requires a disabled ground BS");
        if (*disabled_bs < 0 || *disabled_bs >= sites)
            throw ConfigError("disabled_bs " + std::to_string(*disabled_bs) + " is not a ground BS id");
    }
}

std::size_t ScenarioConfig::slot_count() const {
    // Slack absorbs durations like 0.3 / 0.1 landing just under an integer.
    return static_cast<std::size_t>(std::floor(sim_duration / t_min + 1e-9)) + 1;
}

ScenarioConfig full_preset() { return ScenarioConfig{}; }

ScenarioConfig desk_preset() {
    ScenarioConfig c;
    c.n_users = 100;
    c.n_rings = 1;
    c.grid_x = 5;
    c.grid_y = 5;
    c.grid_h = 3;
    return c;
}

ScenarioConfig preset_by_name(std::string_view name) {
    if (name == "full" || name == "paper") return full_preset();
    if (name == "desk") return desk_preset();
    throw ConfigError("unknown preset '" + std::string(name) + "'");
}

namespace {

// Random stream purposes; each gets an independent stream per seed.
constexpr std::uint64_t kUserDropStream = 1;
constexpr std::uint64_t kMobilityStream = 2;
constexpr std::uint64_t kLearningStream = 3;

void advance_users(std::vector<User>& users, double duration, const ScenarioConfig& cfg, RandomStream& rng) {
    double left = duration;
    while (left > 1e-9) {
        const double dt = std::min(cfg.mobility_dt, left);
        users = step(users, dt, cfg.mobility, cfg.area, rng);
        left -= dt;
    }
}

}  // namespace

Deployment deploy(const ScenarioConfig& cfg) {
    Deployment d{{}, {}, RandomStream(RandomStream::derive(cfg.seed, kMobilityStream))};
    d.ground = hex_layout(cfg.n_rings, cfg.area, cfg.ground_antenna_height_m, cfg.ground_tx_power_dbm);
    RandomStream drop_rng(RandomStream::derive(cfg.seed, kUserDropStream));
    const auto positions = drop_users_ppp(cfg.n_users, cfg.area, drop_rng);
    d.users = spawn_users(positions, cfg.mobility, d.mobility_rng);
    return d;
}

NetworkState make_state(const ScenarioConfig& cfg, std::vector<GroundBS> ground, std::vector<Position2D> users,
                        std::optional<Position3D> aerial) {
    NetworkState st;
    st.ground_bs = std::move(ground);
    st.users = std::move(users);
    st.aerial_pos = aerial;
    st.aerial_tx_power_dbm = cfg.aerial_tx_power_dbm;
    st.env = cfg.env;
    st.radio = cfg.radio;
    return st;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg, std::optional<QTable> warm) {
    cfg.validate();
    const PlacementGrid grid = cfg.grid();
    Deployment dep = deploy(cfg);
    RandomStream learn_rng(RandomStream::derive(cfg.seed, kLearningStream));

    ScenarioResult out;
    const std::vector<GroundBS> full_ground = dep.ground;
    out.qos_th = aggregate_qos(make_state(cfg, full_ground, positions_of(dep.users), std::nullopt));

    std::vector<GroundBS> ground = full_ground;
    std::optional<Position3D> aerial;
    std::size_t aerial_state = 0;
    if (cfg.mode == BaselineMode::kAerial) {
        GroundBS& off = ground.at(static_cast<std::size_t>(*cfg.disabled_bs));
        off.active = false;
        aerial_state = grid.index_of({std::clamp(off.pos.x, cfg.area.x_min, cfg.area.x_max),
                                      std::clamp(off.pos.y, cfg.area.y_min, cfg.area.y_max), cfg.area.h_min});
        aerial = grid.position(aerial_state);
        if (warm) {
            if (!warm->matches(grid)) throw ConfigError("warm-start Q-table does not match the placement grid");
            out.q = std::move(warm);
        } else {
            out.q = QTable(grid, cfg.qtable);
        }
    }

    const std::size_t slots = cfg.slot_count();
    out.records.reserve(slots);
    for (std::size_t k = 0; k < slots; ++k) {
        if (k > 0) advance_users(dep.users, cfg.t_min, cfg, dep.mobility_rng);
        NetworkState st = make_state(cfg, ground, positions_of(dep.users), aerial);

        TimeSlotRecord rec;
        rec.t = static_cast<double>(k) * cfg.t_min;
        rec.qos_th = out.qos_th;
        rec.qos = aggregate_qos(st);

        // The trigger is the full ground network at the current user positions.
        const bool below = cfg.mode == BaselineMode::kAerial
                               ? aggregate_qos(make_state(cfg, full_ground, st.users, std::nullopt)) < out.qos_th
                               : false;
        if (below) {
            PlacementResult placed = learn_placement(aerial_state, st, std::move(*out.q), cfg.learning, grid, learn_rng);
            out.reward_trace.insert(out.reward_trace.end(), placed.reward_trace.begin(), placed.reward_trace.end());
            ++out.learning_sessions;
            rec.learning_triggered = true;
            rec.episodes_used = placed.settled_after;
            aerial_state = placed.best_state;
            aerial = grid.position(aerial_state);
            out.q = std::move(placed.q);
            st.aerial_pos = aerial;
            rec.qos = aggregate_qos(st);
        }

        rec.aerial_pos = aerial;
        const LinkReport links = link_report(st);
        rec.sinr.reserve(links.users.size());
        for (const auto& u : links.users) rec.sinr.push_back(u.sinr);
        out.records.push_back(std::move(rec));
    }
    return out;
}

NetworkState snapshot_at(const ScenarioConfig& cfg, double t) {
    cfg.validate();
    if (!(t >= 0.0)) throw ConfigError("snapshot time must be non-negative");
    Deployment dep = deploy(cfg);
    advance_users(dep.users, t, cfg, dep.mobility_rng);
    if (cfg.mode == BaselineMode::kAerial) dep.ground.at(static_cast<std::size_t>(*cfg.disabled_bs)).active = false;
    return make_state(cfg, std::move(dep.ground), positions_of(dep.users), std::nullopt);
}

OracleResult oracle_at(const ScenarioConfig& cfg, double t, unsigned threads) {
    const PlacementGrid grid = cfg.grid();
    if (grid.size() > cfg.oracle_max_states)
        throw ConfigError("grid has " + std::to_string(grid.size()) + " states, above oracle_max_states = " +
                          std::to_string(cfg.oracle_max_states));
    return exhaustive_search(snapshot_at(cfg, t), grid, threads);
}

}  // namespace aerialq
