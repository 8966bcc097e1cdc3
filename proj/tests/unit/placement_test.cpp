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

#include <array>
#include <cmath>
#include <filesystem>
#include <numeric>

#include <gtest/gtest.h>

#include "aerialq/oracle.hpp"
#include "aerialq/placement.hpp"
#include "aerialq/scenario.hpp"

namespace aerialq {
namespace {

const ServiceArea kArea = ServiceArea::square(4.0e6, 25.0, 525.0);

NetworkState desk_snapshot(std::uint64_t seed, std::size_t users = 50) {
    ScenarioConfig cfg = desk_preset();
    cfg.seed = seed;
    cfg.n_users = users;
    const Deployment d = deploy(cfg);
    return make_state(cfg, d.ground, positions_of(d.users), std::nullopt);
}

TEST(ApplyActionTest, ClampsAtBoundaries) {
    const PlacementGrid g(kArea, 5, 5, 3);
    const std::size_t west = g.index({0, 2, 1});
    EXPECT_EQ(apply_action(west, Action::kMinusX, g), west);
    const std::size_t corner = g.index({4, 4, 2});
    for (Action a : {Action::kPlusX, Action::kPlusY, Action::kPlusH}) EXPECT_EQ(apply_action(corner, a, g), corner);
    EXPECT_EQ(apply_action(g.index({0, 0, 0}), Action::kMinusH, g), 0u);
}

TEST(ApplyActionTest, OppositeActionsCancelInTheInterior) {
    const PlacementGrid g(kArea, 5, 5, 3);
    const std::size_t s = g.index({2, 2, 1});
    EXPECT_EQ(apply_action(apply_action(s, Action::kPlusH, g), Action::kMinusH, g), s);
    EXPECT_EQ(apply_action(apply_action(s, Action::kMinusX, g), Action::kPlusX, g), s);
    EXPECT_EQ(apply_action(apply_action(s, Action::kPlusY, g), Action::kMinusY, g), s);
    EXPECT_EQ(g.coord(apply_action(s, Action::kPlusY, g)), (GridCoord{2, 3, 1}));
}

TEST(RewardTest, DifferenceOfQos) {
    EXPECT_DOUBLE_EQ(reward(10.0, 10.0), 0.0);
    EXPECT_DOUBLE_EQ(reward(12.5, 10.0), 2.5);
}

TEST(RewardTest, RewardsTelescopeAlongTrajectories) {
    const PlacementGrid g(kArea, 5, 5, 3);
    QosCache qos(desk_snapshot(3), g);
    RandomStream rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t s = rng.below(g.size());
        const double start = qos(s);
        double sum = 0.0;
        for (int t = 0; t < 50; ++t) {
            const std::size_t next = apply_action(s, kAllActions[rng.below(kActionCount)], g);
            sum += reward(qos(next), qos(s));
            s = next;
        }
        EXPECT_NEAR(sum, qos(s) - start, 1e-9);
    }
}

TEST(QUpdateTest, SingleUpdateFromZero) {
    QTableParams p;
    p.alpha_mode = AlphaMode::kConstant;
    p.alpha = 0.5;
    QTable q(3, 1, 1, p);
    q.update(0, Action::kPlusX, 1.0, 2);
    EXPECT_DOUBLE_EQ(q.value(0, Action::kPlusX), 0.5);
    EXPECT_EQ(q.visits(0, Action::kPlusX), 1u);
}

TEST(QUpdateTest, FixedPointIsUnchanged) {
    QTableParams p;
    p.alpha_mode = AlphaMode::kConstant;
    p.alpha = 0.5;
    QTable q(2, 1, 1, p);
    // Q(s,a) = gamma * max Q(s') with r = 0 means the TD error vanishes.
    q.set_value(1, Action::kPlusX, 2.0);
    q.set_value(0, Action::kPlusX, 0.9 * 2.0);
    q.update(0, Action::kPlusX, 0.0, 1);
    EXPECT_DOUBLE_EQ(q.value(0, Action::kPlusX), 1.8);
}

TEST(QUpdateTest, TwoStateChainHandWorked) {
    QTableParams p;
    p.alpha_mode = AlphaMode::kConstant;
    p.alpha = 0.5;
    QTable q(2, 1, 1, p);
    // 0 --(+x, r=1)--> 1: 0 + 0.5 (1 + 0.9*0 - 0) = 0.5
    q.update(0, Action::kPlusX, 1.0, 1);
    EXPECT_DOUBLE_EQ(q.value(0, Action::kPlusX), 0.5);
    // 1 --(-x, r=1)--> 0: 0 + 0.5 (1 + 0.9*0.5 - 0) = 0.725
    q.update(1, Action::kMinusX, 1.0, 0);
    EXPECT_DOUBLE_EQ(q.value(1, Action::kMinusX), 0.725);
    // 0 --(+x, r=0)--> 1: 0.5 + 0.5 (0 + 0.9*0.725 - 0.5) = 0.57625
    q.update(0, Action::kPlusX, 0.0, 1);
    EXPECT_DOUBLE_EQ(q.value(0, Action::kPlusX), 0.57625);
}

TEST(QUpdateTest, InverseVisitScheduleAveragesTargets) {
    QTable q(2, 1, 1);
    // alpha = 1, 1/2, 1/3: the running mean of the targets 3, 6, 0.
    q.update(0, Action::kMinusX, 3.0, 1);
    EXPECT_DOUBLE_EQ(q.value(0, Action::kMinusX), 3.0);
    q.update(0, Action::kMinusX, 6.0, 1);
    EXPECT_DOUBLE_EQ(q.value(0, Action::kMinusX), 4.5);
    q.update(0, Action::kMinusX, 0.0, 1);
    EXPECT_DOUBLE_EQ(q.value(0, Action::kMinusX), 3.0);
}

TEST(QUpdateTest, LiteralFormDropsCarriedTerm) {
    QTableParams p;
    p.alpha_mode = AlphaMode::kConstant;
    p.alpha = 0.5;
    p.update = UpdateForm::kLiteral;
    QTable q(2, 1, 1, p);
    q.set_value(0, Action::kPlusX, 1.0);
    q.update(0, Action::kPlusX, 2.0, 1);
    EXPECT_DOUBLE_EQ(q.value(0, Action::kPlusX), 0.5 * (2.0 - 1.0));
}

TEST(SelectActionTest, GreedyArgmaxAndTieBreak) {
    QTable q(3, 3, 3);
    RandomStream rng(1);
    const std::size_t s = 13;
    EXPECT_EQ(select_action(q, s, 0.0, rng), Action::kPlusX);
    q.set_value(s, Action::kMinusY, 1.0);
    EXPECT_EQ(select_action(q, s, 0.0, rng), Action::kMinusY);
    q.set_value(s, Action::kMinusX, 1.0);
    EXPECT_EQ(select_action(q, s, 0.0, rng), Action::kMinusX);
}

TEST(SelectActionTest, FullExplorationIsUniform) {
    QTable q(3, 3, 3);
    q.set_value(0, Action::kPlusH, 100.0);
    RandomStream rng(77);
    std::array<int, kActionCount> counts{};
    const int n = 60000;
    for (int i = 0; i < n; ++i) ++counts[static_cast<std::size_t>(select_action(q, 0, 1.0, rng))];
    const double mean = n / 6.0;
    const double sigma = std::sqrt(n * (1.0 / 6.0) * (5.0 / 6.0));
    for (int c : counts) EXPECT_NEAR(c, mean, 3.0 * sigma);
}

TEST(QTableTest, JsonRoundTripPreservesEverything) {
    QTable q(3, 2, 2);
    RandomStream rng(3);
    for (int i = 0; i < 200; ++i)
        q.update(rng.below(q.states()), kAllActions[rng.below(kActionCount)], rng.uniform(-5, 5), rng.below(q.states()));
    const QTable back = QTable::from_json(q.to_json());
    EXPECT_EQ(back, q);

    const auto path = std::filesystem::temp_directory_path() / "aerialq_qtable_test.json";
    q.save(path);
    EXPECT_EQ(QTable::load(path), q);
    std::filesystem::remove(path);
}

TEST(QTableTest, RejectsMalformedDocuments) {
    EXPECT_THROW((void)QTable::from_json("{"), ConfigError);
    EXPECT_THROW((void)QTable::from_json(R"({"format":"other"})"), ConfigError);
    auto j = nlohmann::json::parse(QTable(2, 2, 2).to_json());
    j["version"] = 99;
    EXPECT_THROW((void)QTable::from_json(j.dump()), ConfigError);
    j = nlohmann::json::parse(QTable(2, 2, 2).to_json());
    j["values"].erase(0);
    EXPECT_THROW((void)QTable::from_json(j.dump()), ConfigError);
    EXPECT_THROW((void)QTable::load("/nonexistent/q.json"), IoError);
}

TEST(QosCacheTest, BitIdenticalToRecomputation) {
    const NetworkState snap = desk_snapshot(9);
    const PlacementGrid g(kArea, 5, 5, 3);
    QosCache cache(snap, g);
    for (std::size_t s = 0; s < g.size(); ++s) {
        NetworkState probe = snap;
        probe.aerial_pos = g.position(s);
        EXPECT_EQ(cache(s), aggregate_qos(probe)) << s;
        EXPECT_EQ(cache(s), aggregate_qos(probe)) << "second read " << s;
    }
    EXPECT_EQ(cache.evaluated(), g.size());
}

TEST(LearnPlacementTest, SingleStateGrid) {
    const PlacementGrid g(kArea, 1, 1, 1);
    RandomStream rng(1);
    LearningConfig cfg;
    cfg.max_episodes = 10;
    cfg.max_steps = 5;
    const auto r = learn_placement(0, desk_snapshot(1), QTable(g), cfg, g, rng);
    EXPECT_EQ(r.best_state, 0u);
    EXPECT_EQ(r.reward_trace.size(), 50u);
    for (double x : r.reward_trace) EXPECT_EQ(x, 0.0);
}

TEST(LearnPlacementTest, RejectsMismatchedTable) {
    const PlacementGrid g(kArea, 3, 3, 3);
    RandomStream rng(1);
    EXPECT_THROW((void)learn_placement(0, desk_snapshot(1), QTable(2, 2, 2), LearningConfig{}, g, rng), ConfigError);
    EXPECT_THROW((void)learn_placement(99, desk_snapshot(1), QTable(g), LearningConfig{}, g, rng), std::out_of_range);
}

TEST(LearnPlacementTest, ConvergedRunInvariants) {
    const PlacementGrid g(kArea, 5, 5, 3);
    const NetworkState snap = desk_snapshot(4);
    RandomStream rng(4);
    const std::size_t start = g.index_of({1000, 1000, 25});
    const auto r = learn_placement(start, snap, QTable(g), LearningConfig{}, g, rng);

    // |Q| <= max|r| / (1 - gamma)
    double max_r = 0.0;
    for (double x : r.reward_trace) max_r = std::max(max_r, std::abs(x));
    EXPECT_LE(r.q.max_abs_value(), max_r / (1.0 - r.q.params().gamma) + 1e-9);

    // Greedy answer is a local maximum of QoS over grid neighbours.
    QosCache qos(snap, g);
    for (Action a : kAllActions) EXPECT_LE(qos(apply_action(r.best_state, a, g)), qos(r.best_state));
    EXPECT_EQ(r.best_qos, qos(r.best_state));

    // Matches the exhaustive optimum on this snapshot.
    const OracleResult o = exhaustive_search(snap, g);
    EXPECT_GE(r.best_qos, 0.99 * o.best_qos);

    // Reward trace trends to zero.
    const std::size_t tenth = r.reward_trace.size() / 10;
    double head = 0.0;
    double tail = 0.0;
    for (std::size_t i = 0; i < tenth; ++i) {
        head += std::abs(r.reward_trace[i]);
        tail += std::abs(r.reward_trace[r.reward_trace.size() - tenth + i]);
    }
    EXPECT_LE(tail, 0.1 * head);
}

TEST(LearnPlacementTest, ObserverSeesEveryEpisode) {
    const PlacementGrid g(kArea, 3, 3, 2);
    RandomStream rng(2);
    LearningConfig cfg;
    cfg.max_episodes = 25;
    cfg.max_steps = 10;
    std::size_t calls = 0;
    const auto r = learn_placement(0, desk_snapshot(2), QTable(g), cfg, g, rng,
                                   [&](std::size_t episode, const QTable&, QosCache&) { EXPECT_EQ(episode, ++calls); });
    EXPECT_EQ(calls, 25u);
    EXPECT_LE(r.settled_after, 25u);
}

TEST(LearnPlacementTest, SameSeedSameResult) {
    const PlacementGrid g(kArea, 5, 5, 3);
    const NetworkState snap = desk_snapshot(6);
    LearningConfig cfg;
    cfg.max_episodes = 300;
    RandomStream a(10);
    RandomStream b(10);
    const auto ra = learn_placement(0, snap, QTable(g), cfg, g, a);
    const auto rb = learn_placement(0, snap, QTable(g), cfg, g, b);
    EXPECT_EQ(ra.q, rb.q);
    EXPECT_EQ(ra.reward_trace, rb.reward_trace);
    EXPECT_EQ(ra.best_state, rb.best_state);
}

}  // namespace
}  // namespace aerialq
