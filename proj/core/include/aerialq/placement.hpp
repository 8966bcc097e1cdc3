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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "aerialq/deployment.hpp"
#include "aerialq/radio.hpp"
#include "aerialq/rng.hpp"

namespace aerialq {

/// One grid step along an axis. Declaration order is the greedy tie-break order.
enum class Action : std::size_t { kPlusX, kMinusX, kPlusY, kMinusY, kPlusH, kMinusH };

inline constexpr std::size_t kActionCount = 6;
inline constexpr std::array<Action, kActionCount> kAllActions = {Action::kPlusX, Action::kMinusX, Action::kPlusY,
                                                                 Action::kMinusY, Action::kPlusH, Action::kMinusH};

[[nodiscard]] std::string_view to_string(Action a);

/// Neighbouring state one step along the action's axis; a move that would
/// leave the grid keeps the current state.
[[nodiscard]] std::size_t apply_action(std::size_t s, Action a, const PlacementGrid& grid);

/// Per-step reward: change in aggregate QoS.
[[nodiscard]] constexpr double reward(double qos_now, double qos_prev) { return qos_now - qos_prev; }

enum class AlphaMode {
    /// alpha = 1 / (1 + n), n the prior visit count of (s, a).
    kInverseVisits,
    kConstant,
};

enum class UpdateForm {
    /// Q += alpha (r + gamma max Q' - Q).
    kStandard,
    /// Q = alpha (r + gamma max Q' - Q), the typeset form without the carried term.
    kLiteral,
};

struct QTableParams {
    double gamma = 0.9;
    double epsilon = 0.9;
    AlphaMode alpha_mode = AlphaMode::kInverseVisits;
    double alpha = 0.5;  // used by AlphaMode::kConstant
    UpdateForm update = UpdateForm::kStandard;

    void validate() const;

    friend bool operator==(const QTableParams&, const QTableParams&) = default;
};

/// Action-value table over the placement grid plus its visit counts.
class QTable {
public:
    QTable(std::size_t n_x, std::size_t n_y, std::size_t n_h, QTableParams params = {});
    explicit QTable(const PlacementGrid& grid, QTableParams params = {})
        : QTable(grid.n_x(), grid.n_y(), grid.n_h(), params) {}

    [[nodiscard]] std::size_t states() const { return n_x_ * n_y_ * n_h_; }
    [[nodiscard]] std::size_t n_x() const { return n_x_; }
    [[nodiscard]] std::size_t n_y() const { return n_y_; }
    [[nodiscard]] std::size_t n_h() const { return n_h_; }
    [[nodiscard]] bool matches(const PlacementGrid& grid) const;

    [[nodiscard]] const QTableParams& params() const { return params_; }
    QTableParams& params() { return params_; }

    [[nodiscard]] double value(std::size_t s, Action a) const { return values_.at(slot(s, a)); }
    void set_value(std::size_t s, Action a, double v) { values_.at(slot(s, a)) = v; }
    [[nodiscard]] std::uint64_t visits(std::size_t s, Action a) const { return visits_.at(slot(s, a)); }

    [[nodiscard]] double max_value(std::size_t s) const;
    /// First action (in kAllActions order) attaining max_value(s).
    [[nodiscard]] Action greedy_action(std::size_t s) const;
    [[nodiscard]] double max_abs_value() const;

    /// One Q-learning backup of (s, a) -> s_next with reward r; increments visits(s, a).
    void update(std::size_t s, Action a, double r, std::size_t s_next);

    [[nodiscard]] const std::vector<double>& values() const { return values_; }
    [[nodiscard]] const std::vector<std::uint64_t>& visit_counts() const { return visits_; }

    /// Versioned JSON document with dimensions, hyperparameters, counts and values.
    void save(const std::filesystem::path& path) const;
    [[nodiscard]] static QTable load(const std::filesystem::path& path);
    [[nodiscard]] std::string to_json() const;
    [[nodiscard]] static QTable from_json(std::string_view text);

    friend bool operator==(const QTable&, const QTable&) = default;

private:
    [[nodiscard]] std::size_t slot(std::size_t s, Action a) const {
        return s * kActionCount + static_cast<std::size_t>(a);
    }

    std::size_t n_x_;
    std::size_t n_y_;
    std::size_t n_h_;
    QTableParams params_;
    std::vector<double> values_;
    std::vector<std::uint64_t> visits_;
};

/// Epsilon-greedy: uniform action with probability epsilon, else greedy_action(s).
[[nodiscard]] Action select_action(const QTable& q, std::size_t s, double epsilon, RandomStream& rng);

struct LearningConfig {
    std::size_t max_episodes = 5000;
    std::size_t max_steps = 120;
    /// Per-episode multiplier on epsilon; 1 keeps it fixed.
    double epsilon_decay = 0.998;
    double epsilon_floor = 0.0;

    void validate(double initial_epsilon) const;
    [[nodiscard]] double epsilon_at(std::size_t episode, double initial_epsilon) const;
};

/// Lazily memoized aggregate QoS for each grid state on a frozen snapshot.
class QosCache {
public:
    QosCache(const NetworkState& snapshot, const PlacementGrid& grid);

    [[nodiscard]] double operator()(std::size_t s);
    [[nodiscard]] const PlacementGrid& grid() const { return grid_; }
    [[nodiscard]] std::size_t evaluated() const { return evaluated_; }

private:
    LinkBudget budget_;
    PlacementGrid grid_;
    std::vector<double> qos_;
    std::vector<bool> known_;
    std::size_t evaluated_ = 0;
};

struct Rollout {
    std::vector<std::size_t> path;  // visited states, start first
    std::size_t best_state = 0;     // highest-QoS state on the path
    double best_qos = 0.0;
};

/// Follows the greedy policy from `start` for up to n_x + n_y + n_h moves,
/// stopping early when it would revisit a state, and reports the best state seen.
[[nodiscard]] Rollout greedy_rollout(const QTable& q, std::size_t start, QosCache& qos);

struct PlacementResult {
    std::size_t best_state = 0;
    double best_qos = 0.0;
    QTable q;
    std::vector<double> reward_trace;  // one entry per learning step
    /// First episode count after which the greedy rollout answer never changed.
    std::size_t settled_after = 0;
};

/// Called after every episode with the 1-based episode count.
using EpisodeObserver = std::function<void(std::size_t episode, const QTable& q, QosCache& qos)>;

/// Tabular Q-learning on a frozen snapshot. Every episode starts at
/// `initial_state`; the returned placement is the greedy rollout answer.
[[nodiscard]] PlacementResult learn_placement(std::size_t initial_state, const NetworkState& snapshot, QTable q,
                                              const LearningConfig& cfg, const PlacementGrid& grid,
                                              RandomStream& rng, const EpisodeObserver& observer = {});

}  // namespace aerialq
