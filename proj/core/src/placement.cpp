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

#include "aerialq/placement.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace aerialq {

std::string_view to_string(Action a) {
    switch (a) {
        case Action::kPlusX: return "+x";
        case Action::kMinusX: return "-x";
        case Action::kPlusY: return "+y";
        case Action::kMinusY: return "-y";
        case Action::kPlusH: return "+h";
        case Action::kMinusH: return "-h";
    }
    return "?";
}

std::size_t apply_action(std::size_t s, Action a, const PlacementGrid& grid) {
    GridCoord c = grid.coord(s);
    switch (a) {
        case Action::kPlusX:
            if (c.ix + 1 < grid.n_x()) ++c.ix;
            break;
        case Action::kMinusX:
            if (c.ix > 0) --c.ix;
            break;
        case Action::kPlusY:
            if (c.iy + 1 < grid.n_y()) ++c.iy;
            break;
        case Action::kMinusY:
            if (c.iy > 0) --c.iy;
            break;
        case Action::kPlusH:
            if (c.ih + 1 < grid.n_h()) ++c.ih;
            break;
        case Action::kMinusH:
            if (c.ih > 0) --c.ih;
            break;
    }
    return grid.index(c);
}

void QTableParams::validate() const {
    if (!(gamma > 0.0 && gamma < 1.0)) throw ConfigError("gamma must lie in (0, 1)");
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw ConfigError("epsilon must lie in [0, 1]");
    if (alpha_mode == AlphaMode::kConstant && !(alpha > 0.0 && alpha <= 1.0))
        throw ConfigError("constant alpha must lie in (0, 1]");
}

QTable::QTable(std::size_t n_x, std::size_t n_y, std::size_t n_h, QTableParams params)
    : n_x_(n_x), n_y_(n_y), n_h_(n_h), params_(params) {
    if (states() == 0) throw ConfigError("Q-table needs at least one state");
    params_.validate();
    values_.assign(states() * kActionCount, 0.0);
    visits_.assign(states() * kActionCount, 0);
}

bool QTable::matches(const PlacementGrid& grid) const {
    return n_x_ == grid.n_x() && n_y_ == grid.n_y() && n_h_ == grid.n_h();
}

double QTable::max_value(std::size_t s) const {
    const auto row = values_.begin() + static_cast<std::ptrdiff_t>(slot(s, Action::kPlusX));
    return *std::max_element(row, row + kActionCount);
}

Action QTable::greedy_action(std::size_t s) const {
    Action best = Action::kPlusX;
    double best_v = value(s, best);
    for (Action a : kAllActions) {
        if (value(s, a) > best_v) {
            best_v = value(s, a);
            best = a;
        }
    }
    return best;
}

double QTable::max_abs_value() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

void QTable::update(std::size_t s, Action a, double r, std::size_t s_next) {
    const std::size_t k = slot(s, a);
    const double alpha = params_.alpha_mode == AlphaMode::kInverseVisits
                             ? 1.0 / (1.0 + static_cast<double>(visits_.at(k)))
                             : params_.alpha;
    const double td = r + params_.gamma * max_value(s_next) - values_[k];
    if (params_.update == UpdateForm::kStandard)
        values_[k] += alpha * td;
    else
        values_[k] = alpha * td;
    ++visits_[k];
}

namespace {

constexpr std::string_view kFormat = "aerialq-qtable";
constexpr int kVersion = 1;

}  // namespace

std::string QTable::to_json() const {
    nlohmann::json j;
    j["format"] = kFormat;
    j["version"] = kVersion;
    j["n_x"] = n_x_;
    j["n_y"] = n_y_;
    j["n_h"] = n_h_;
    j["actions"] = kActionCount;
    j["gamma"] = params_.gamma;
    j["epsilon"] = params_.epsilon;
    j["alpha_mode"] = params_.alpha_mode == AlphaMode::kInverseVisits ? "inverse_visits" : "constant";
    j["alpha"] = params_.alpha;
    j["update"] = params_.update == UpdateForm::kStandard ? "standard" : "literal";
    j["visits"] = visits_;
    j["values"] = values_;
    return j.dump();
}

QTable QTable::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("malformed Q-table document: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != kFormat) throw ConfigError("not a Q-table document");
        if (j.at("version").get<int>() != kVersion)
            throw ConfigError("unsupported Q-table version " + j.at("version").dump());
        if (j.at("actions").get<std::size_t>() != kActionCount) throw ConfigError("Q-table action count mismatch");
        QTableParams p;
        p.gamma = j.at("gamma").get<double>();
        p.epsilon = j.at("epsilon").get<double>();
        const auto mode = j.at("alpha_mode").get<std::string>();
        if (mode != "inverse_visits" && mode != "constant") throw ConfigError("unknown alpha_mode " + mode);
        p.alpha_mode = mode == "constant" ? AlphaMode::kConstant : AlphaMode::kInverseVisits;
        p.alpha = j.at("alpha").get<double>();
        const auto form = j.at("update").get<std::string>();
        if (form != "standard" && form != "literal") throw ConfigError("unknown update form " + form);
        p.update = form == "literal" ? UpdateForm::kLiteral : UpdateForm::kStandard;

        QTable q(j.at("n_x").get<std::size_t>(), j.at("n_y").get<std::size_t>(), j.at("n_h").get<std::size_t>(), p);
        auto values = j.at("values").get<std::vector<double>>();
        auto visits = j.at("visits").get<std::vector<std::uint64_t>>();
        if (values.size() != q.values_.size() || visits.size() != q.visits_.size())
            throw ConfigError("Q-table payload does not match its dimensions");
        q.values_ = std::move(values);
        q.visits_ = std::move(visits);
        return q;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid Q-table document: ") + e.what());
    }
}

void QTable::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << to_json() << '\n';
    if (!out) throw IoError("failed writing " + path.string());
}

QTable QTable::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

Action select_action(const QTable& q, std::size_t s, double epsilon, RandomStream& rng) {
    // The exploration coin is always drawn so the stream advances uniformly.
    if (rng.uniform() < epsilon) return kAllActions[rng.below(kActionCount)];
    return q.greedy_action(s);
}

void LearningConfig::validate(double initial_epsilon) const {
    if (max_episodes == 0 || max_steps == 0) throw ConfigError("max_episodes and max_steps must be positive");
    if (!(epsilon_decay > 0.0 && epsilon_decay <= 1.0)) throw ConfigError("epsilon_decay must lie in (0, 1]");
    if (!(epsilon_floor >= 0.0 && epsilon_floor <= initial_epsilon))
        throw ConfigError("epsilon_floor must lie in [0, initial epsilon]");
}

double LearningConfig::epsilon_at(std::size_t episode, double initial_epsilon) const {
    return std::max(epsilon_floor, initial_epsilon * std::pow(epsilon_decay, static_cast<double>(episode)));
}

QosCache::QosCache(const NetworkState& snapshot, const PlacementGrid& grid)
    : budget_(snapshot), grid_(grid), qos_(grid.size(), 0.0), known_(grid.size(), false) {}

double QosCache::operator()(std::size_t s) {
    if (!known_.at(s)) {
        qos_[s] = budget_.qos(grid_.position(s));
        known_[s] = true;
        ++evaluated_;
    }
    return qos_[s];
}

Rollout greedy_rollout(const QTable& q, std::size_t start, QosCache& qos) {
    const PlacementGrid& grid = qos.grid();
    const std::size_t limit = grid.n_x() + grid.n_y() + grid.n_h();
    Rollout r;
    r.path.push_back(start);
    r.best_state = start;
    r.best_qos = qos(start);
    std::size_t s = start;
    for (std::size_t i = 0; i < limit; ++i) {
        const std::size_t next = apply_action(s, q.greedy_action(s), grid);
        if (std::find(r.path.begin(), r.path.end(), next) != r.path.end()) break;
        r.path.push_back(next);
        const double v = qos(next);
        if (v > r.best_qos || (v == r.best_qos && next < r.best_state)) {
            r.best_qos = v;
            r.best_state = next;
        }
        s = next;
    }
    return r;
}

PlacementResult learn_placement(std::size_t initial_state, const NetworkState& snapshot, QTable q,
                                const LearningConfig& cfg, const PlacementGrid& grid, RandomStream& rng,
                                const EpisodeObserver& observer) {
    if (grid.size() == 0) throw ConfigError("placement grid is empty");
    if (!q.matches(grid)) throw ConfigError("Q-table dimensions do not match the placement grid");
    if (initial_state >= grid.size()) throw std::out_of_range("initial state outside the placement grid");
    cfg.validate(q.params().epsilon);

    QosCache qos(snapshot, grid);
    PlacementResult out{initial_state, 0.0, std::move(q), {}, 0};
    out.reward_trace.reserve(cfg.max_episodes * cfg.max_steps);

    std::size_t answer = greedy_rollout(out.q, initial_state, qos).best_state;
    for (std::size_t episode = 0; episode < cfg.max_episodes; ++episode) {
        const double epsilon = cfg.epsilon_at(episode, out.q.params().epsilon);
        std::size_t s = initial_state;
        double qos_prev = qos(s);
        for (std::size_t t = 0; t < cfg.max_steps; ++t) {
            const Action a = select_action(out.q, s, epsilon, rng);
            const std::size_t next = apply_action(s, a, grid);
            const double qos_now = qos(next);
            const double r = reward(qos_now, qos_prev);
            out.q.update(s, a, r, next);
            out.reward_trace.push_back(r);
            s = next;
            qos_prev = qos_now;
        }
        const std::size_t now = greedy_rollout(out.q, initial_state, qos).best_state;
        if (now != answer) {
            answer = now;
            out.settled_after = episode + 1;
        }
        if (observer) observer(episode + 1, out.q, qos);
    }

    const Rollout final = greedy_rollout(out.q, initial_state, qos);
    out.best_state = final.best_state;
    out.best_qos = final.best_qos;
    return out;
}

}  // namespace aerialq
