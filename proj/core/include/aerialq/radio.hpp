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
#include <optional>
#include <span>
#include <vector>

#include "aerialq/channel.hpp"
#include "aerialq/deployment.hpp"

namespace aerialq {

/// Downlink snapshot: every active BS transmits continuously on one shared
/// channel, so each non-serving active BS interferes at every user.
///
/// BS identifiers: ground BSs use their index 0..J-1; the aerial BS, when
/// present, uses J (see aerial_id()).
struct NetworkState {
    std::vector<GroundBS> ground_bs;
    std::optional<Position3D> aerial_pos;
    double aerial_tx_power_dbm = 36.0;
    std::vector<Position2D> users;
    AtgEnvironment env;
    RadioParams radio;

    [[nodiscard]] int aerial_id() const { return static_cast<int>(ground_bs.size()); }
    [[nodiscard]] std::size_t bs_slots() const { return ground_bs.size() + 1; }
    [[nodiscard]] bool is_active(int bs) const;
    [[nodiscard]] std::size_t active_count() const;

    /// Throws ConfigError if no BS is active or ground ids are not 0..J-1.
    void validate() const;
};

/// Serving BS per user; exactly one entry per user.
struct AssociationMap {
    std::vector<int> serving;
};

struct UserLink {
    int serving = 0;
    double sinr = 0.0;
    double throughput = 0.0;
};

struct LinkReport {
    std::vector<UserLink> users;

    [[nodiscard]] double total_throughput() const;
};

/// Received power in dBm at `user` from BS `bs` (ground index or aerial_id()).
[[nodiscard]] double received_power_dbm(const NetworkState& state, int bs, const Position2D& user);

/// Linear SINR of `user` served by `serving`; the denominator is noise plus
/// the received power of every other active BS.
[[nodiscard]] double sinr(const Position2D& user, int serving, const NetworkState& state);

/// Shannon spectral efficiency log2(1 + sinr), bits/s/Hz.
[[nodiscard]] double throughput(double sinr);

/// Each user picks the BS with the highest SINR; ties go to the lowest id.
[[nodiscard]] AssociationMap associate_max_sinr(const NetworkState& state);

/// Sum of per-user throughput under max-SINR association.
[[nodiscard]] double aggregate_qos(const NetworkState& state);

/// Sum of per-user throughput under an arbitrary feasible association.
[[nodiscard]] double aggregate_qos(const NetworkState& state, const AssociationMap& assoc);

[[nodiscard]] LinkReport link_report(const NetworkState& state);

/// Per-user received powers from the ground BSs, cached so the aerial BS can
/// be moved around a fixed snapshot cheaply.
///
/// Results are bit-identical to the free functions above: both paths sum
/// interference in BS-id order over the same per-link powers.
class LinkBudget {
public:
    explicit LinkBudget(const NetworkState& state);

    /// Link report with the aerial BS at `aerial` (or absent).
    [[nodiscard]] LinkReport report(const std::optional<Position3D>& aerial) const;
    [[nodiscard]] double qos(const std::optional<Position3D>& aerial) const;

    [[nodiscard]] std::size_t user_count() const { return users_.size(); }

private:
    template <typename Sink>
    void evaluate(const std::optional<Position3D>& aerial, Sink&& sink) const;

    std::vector<Position2D> users_;
    std::vector<int> active_ground_;
    std::size_t ground_count_;
    // Row-major users_ x active_ground_ in milliwatts.
    std::vector<double> ground_mw_;
    double noise_mw_;
    double aerial_tx_dbm_;
    AtgEnvironment env_;
    RadioParams radio_;
};

}  // namespace aerialq
