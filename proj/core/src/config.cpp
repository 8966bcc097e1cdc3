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

#include <set>
#include <string>

#include "aerialq/scenario.hpp"

namespace aerialq {

using nlohmann::json;

namespace {

std::string_view to_string(LosExponentForm f) { return f == LosExponentForm::kShiftedAngle ? "shifted" : "literal"; }
std::string_view to_string(BoundaryPolicy b) { return b == BoundaryPolicy::kReflect ? "reflect" : "wrap"; }
std::string_view to_string(AlphaMode m) { return m == AlphaMode::kInverseVisits ? "inverse_visits" : "constant"; }
std::string_view to_string(UpdateForm u) { return u == UpdateForm::kStandard ? "standard" : "literal"; }

// Reads the keys of one JSON object, rejecting any it was not asked about.
class Section {
public:
    Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ConfigError("config section '" + path_ + "' must be an object");
    }
    Section(const Section&) = delete;
    Section& operator=(const Section&) = delete;
    ~Section() noexcept(false) {
        if (std::uncaught_exceptions() > 0) return;
        for (const auto& [key, _] : j_.items()) {
            if (!seen_.contains(key)) throw ConfigError("unknown config key '" + qualified(key) + "'");
        }
    }

    template <typename T>
    void read(const char* key, T& dst) {
        seen_.insert(key);
        if (!j_.contains(key)) return;
        try {
            dst = j_.at(key).get<T>();
        } catch (const json::exception&) {
            throw ConfigError("config key '" + qualified(key) + "' has the wrong type");
        }
    }

    template <typename F>
    void read_with(const char* key, F&& parse) {
        seen_.insert(key);
        if (!j_.contains(key)) return;
        if (!j_.at(key).is_string()) throw ConfigError("config key '" + qualified(key) + "' must be a string");
        parse(j_.at(key).get<std::string>());
    }

    [[nodiscard]] const json* child(const char* key) {
        seen_.insert(key);
        return j_.contains(key) ? &j_.at(key) : nullptr;
    }

    [[nodiscard]] std::string qualified(const std::string& key) const {
        return path_.empty() ? key : path_ + "." + key;
    }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

}  // namespace

json to_json(const ScenarioConfig& c) {
    json j;
    j["seed"] = c.seed;
    j["n_users"] = c.n_users;
    j["n_rings"] = c.n_rings;
    j["area"] = {{"x_min", c.area.x_min}, {"x_max", c.area.x_max}, {"y_min", c.area.y_min},
                 {"y_max", c.area.y_max}, {"h_min", c.area.h_min}, {"h_max", c.area.h_max}};
    j["grid"] = {{"n_x", c.grid_x}, {"n_y", c.grid_y}, {"n_h", c.grid_h}};
    j["ground"] = {{"antenna_height_m", c.ground_antenna_height_m}, {"tx_power_dbm", c.ground_tx_power_dbm}};
    j["aerial"] = {{"tx_power_dbm", c.aerial_tx_power_dbm}};
    j["environment"] = {{"kappa", c.env.kappa},
                        {"zeta", c.env.zeta},
                        {"eta_los_db", c.env.eta_los_db},
                        {"eta_nlos_db", c.env.eta_nlos_db},
                        {"los_exponent", to_string(c.env.form)}};
    j["radio"] = {{"carrier_freq_hz", c.radio.carrier_freq_hz},
                  {"noise_power_dbm", c.radio.noise_power_dbm},
                  {"ground_pathloss_exponent", c.radio.ground_pathloss_exponent},
                  {"ground_ref_loss_db", c.radio.ground_ref_loss_db},
                  {"user_height_m", c.radio.user_height_m}};
    j["mobility"] = {{"c_max", c.mobility.c_max},
                     {"hold_time", c.mobility.hold_time},
                     {"boundary", to_string(c.mobility.boundary)},
                     {"dt", c.mobility_dt}};
    j["qlearning"] = {{"gamma", c.qtable.gamma},
                      {"epsilon", c.qtable.epsilon},
                      {"alpha_mode", to_string(c.qtable.alpha_mode)},
                      {"alpha", c.qtable.alpha},
                      {"update", to_string(c.qtable.update)},
                      {"max_episodes", c.learning.max_episodes},
                      {"max_steps", c.learning.max_steps},
                      {"epsilon_decay", c.learning.epsilon_decay},
                      {"epsilon_floor", c.learning.epsilon_floor}};
    j["t_min"] = c.t_min;
    j["sim_duration"] = c.sim_duration;
    j["baseline_mode"] = to_string(c.mode);
    j["disabled_bs"] = c.disabled_bs ? json(*c.disabled_bs) : json(nullptr);
    j["oracle_max_states"] = c.oracle_max_states;
    return j;
}

void apply_json(ScenarioConfig& c, const json& j) {
    Section root(j, "");
    root.read("seed", c.seed);
    root.read("n_users", c.n_users);
    root.read("n_rings", c.n_rings);
    if (const json* a = root.child("area")) {
        Section s(*a, "area");
        double total = 0.0;
        s.read("total_area_m2", total);
        if (total > 0.0) {
            const ServiceArea sq = ServiceArea::square(total, c.area.h_min, c.area.h_max);
            c.area.x_min = sq.x_min;
            c.area.x_max = sq.x_max;
            c.area.y_min = sq.y_min;
            c.area.y_max = sq.y_max;
        }
        s.read("x_min", c.area.x_min);
        s.read("x_max", c.area.x_max);
        s.read("y_min", c.area.y_min);
        s.read("y_max", c.area.y_max);
        s.read("h_min", c.area.h_min);
        s.read("h_max", c.area.h_max);
    }
    if (const json* g = root.child("grid")) {
        Section s(*g, "grid");
        s.read("n_x", c.grid_x);
        s.read("n_y", c.grid_y);
        s.read("n_h", c.grid_h);
    }
    if (const json* g = root.child("ground")) {
        Section s(*g, "ground");
        s.read("antenna_height_m", c.ground_antenna_height_m);
        s.read("tx_power_dbm", c.ground_tx_power_dbm);
    }
    if (const json* a = root.child("aerial")) {
        Section s(*a, "aerial");
        s.read("tx_power_dbm", c.aerial_tx_power_dbm);
    }
    if (const json* e = root.child("environment")) {
        Section s(*e, "environment");
        s.read("kappa", c.env.kappa);
        s.read("zeta", c.env.zeta);
        s.read("eta_los_db", c.env.eta_los_db);
        s.read("eta_nlos_db", c.env.eta_nlos_db);
        s.read_with("los_exponent", [&](const std::string& v) {
            if (v == "shifted")
                c.env.form = LosExponentForm::kShiftedAngle;
            else if (v == "literal")
                c.env.form = LosExponentForm::kLiteral;
            else
                throw ConfigError("environment.los_exponent must be 'shifted' or 'literal'");
        });
    }
    if (const json* r = root.child("radio")) {
        Section s(*r, "radio");
        s.read("carrier_freq_hz", c.radio.carrier_freq_hz);
        s.read("noise_power_dbm", c.radio.noise_power_dbm);
        s.read("ground_pathloss_exponent", c.radio.ground_pathloss_exponent);
        s.read("ground_ref_loss_db", c.radio.ground_ref_loss_db);
        s.read("user_height_m", c.radio.user_height_m);
    }
    if (const json* m = root.child("mobility")) {
        Section s(*m, "mobility");
        s.read("c_max", c.mobility.c_max);
        s.read("hold_time", c.mobility.hold_time);
        s.read("dt", c.mobility_dt);
        s.read_with("boundary", [&](const std::string& v) {
            if (v == "reflect")
                c.mobility.boundary = BoundaryPolicy::kReflect;
            else if (v == "wrap")
                c.mobility.boundary = BoundaryPolicy::kWrap;
            else
                throw ConfigError("mobility.boundary must be 'reflect' or 'wrap'");
        });
    }
    if (const json* q = root.child("qlearning")) {
        Section s(*q, "qlearning");
        s.read("gamma", c.qtable.gamma);
        s.read("epsilon", c.qtable.epsilon);
        s.read("alpha", c.qtable.alpha);
        s.read_with("alpha_mode", [&](const std::string& v) {
            if (v == "inverse_visits")
                c.qtable.alpha_mode = AlphaMode::kInverseVisits;
            else if (v == "constant")
                c.qtable.alpha_mode = AlphaMode::kConstant;
            else
                throw ConfigError("qlearning.alpha_mode must be 'inverse_visits' or 'constant'");
        });
        s.read_with("update", [&](const std::string& v) {
            if (v == "standard")
                c.qtable.update = UpdateForm::kStandard;
            else if (v == "literal")
                c.qtable.update = UpdateForm::kLiteral;
            else
                throw ConfigError("qlearning.update must be 'standard' or 'literal'");
        });
        s.read("max_episodes", c.learning.max_episodes);
        s.read("max_steps", c.learning.max_steps);
        s.read("epsilon_decay", c.learning.epsilon_decay);
        s.read("epsilon_floor", c.learning.epsilon_floor);
    }
    root.read("t_min", c.t_min);
    root.read("sim_duration", c.sim_duration);
    root.read_with("baseline_mode", [&](const std::string& v) { c.mode = parse_baseline_mode(v); });
    if (const json* d = root.child("disabled_bs")) {
        if (d->is_null())
            c.disabled_bs.reset();
        else if (d->is_number_integer())
            c.disabled_bs = d->get<int>();
        else
            throw ConfigError("disabled_bs must be an integer or null");
    }
    root.read("oracle_max_states", c.oracle_max_states);
}

}  // namespace aerialq
