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

#include "aerialq/radio.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace aerialq {

bool NetworkState::is_active(int bs) const {
    if (bs >= 0 && static_cast<std::size_t>(bs) < ground_bs.size()) return ground_bs[bs].active;
    return bs == aerial_id() && aerial_pos.has_value();
}

std::size_t NetworkState::active_count() const {
    std::size_t n = aerial_pos ? 1 : 0;
    for (const auto& bs : ground_bs) n += bs.active ? 1 : 0;
    return n;
}

void NetworkState::validate() const {
    for (std::size_t j = 0; j < ground_bs.size(); ++j) {
        if (ground_bs[j].id != static_cast<int>(j)) throw ConfigError("ground BS ids must be 0..J-1 in order");
    }
    if (active_count() == 0) throw ConfigError("network has no active base station");
    env.validate();
    radio.validate();
}

double received_power_dbm(const NetworkState& state, int bs, const Position2D& user) {
    if (bs == state.aerial_id()) {
        if (!state.aerial_pos) throw std::invalid_argument("aerial BS is not deployed");
        return received_power(state.aerial_tx_power_dbm, atg_pathloss(*state.aerial_pos, user, state.env, state.radio));
    }
    if (bs < 0 || bs > state.aerial_id()) throw std::out_of_range("unknown BS id " + std::to_string(bs));
    const GroundBS& g = state.ground_bs[bs];
    return received_power(g.tx_power_dbm, ground_pathloss(g, user, state.radio));
}

double sinr(const Position2D& user, int serving, const NetworkState& state) {
    if (!state.is_active(serving)) throw std::invalid_argument("serving BS " + std::to_string(serving) + " is not active");
    double signal = 0.0;
    double interference = 0.0;
    for (int k = 0; k <= state.aerial_id(); ++k) {
        if (!state.is_active(k)) continue;
        const double p = dbm_to_mw(received_power_dbm(state, k, user));
        if (k == serving)
            signal = p;
        else
            interference += p;
    }
    return signal / (dbm_to_mw(state.radio.noise_power_dbm) + interference);
}

double throughput(double sinr) { return std::log2(1.0 + sinr); }

double LinkReport::total_throughput() const {
    double sum = 0.0;
    for (const auto& u : users) sum += u.throughput;
    return sum;
}

LinkBudget::LinkBudget(const NetworkState& state)
    : users_(state.users),
      ground_count_(state.ground_bs.size()),
      noise_mw_(dbm_to_mw(state.radio.noise_power_dbm)),
      aerial_tx_dbm_(state.aerial_tx_power_dbm),
      env_(state.env),
      radio_(state.radio) {
    for (const auto& bs : state.ground_bs) {
        if (bs.active) active_ground_.push_back(bs.id);
    }
    ground_mw_.reserve(users_.size() * active_ground_.size());
    for (const auto& u : users_) {
        for (int j : active_ground_) ground_mw_.push_back(dbm_to_mw(received_power_dbm(state, j, u)));
    }
}

template <typename Sink>
void LinkBudget::evaluate(const std::optional<Position3D>& aerial, Sink&& sink) const {
    if (active_ground_.empty() && !aerial) throw ConfigError("network has no active base station");
    const std::size_t n_ground = active_ground_.size();
    const std::size_t n_links = n_ground + (aerial ? 1 : 0);
    std::vector<double> p(n_links);
    for (std::size_t i = 0; i < users_.size(); ++i) {
        for (std::size_t k = 0; k < n_ground; ++k) p[k] = ground_mw_[i * n_ground + k];
        if (aerial) p[n_ground] = dbm_to_mw(received_power(aerial_tx_dbm_, atg_pathloss(*aerial, users_[i], env_, radio_)));

        std::size_t best = 0;
        double best_sinr = -1.0;
        for (std::size_t j = 0; j < n_links; ++j) {
            double interference = 0.0;
            for (std::size_t k = 0; k < n_links; ++k) {
                if (k != j) interference += p[k];
            }
            const double s = p[j] / (noise_mw_ + interference);
            if (s > best_sinr) {
                best_sinr = s;
                best = j;
            }
        }
        const int id = best < n_ground ? active_ground_[best] : static_cast<int>(ground_count_);
        sink(i, UserLink{id, best_sinr, throughput(best_sinr)});
    }
}

LinkReport LinkBudget::report(const std::optional<Position3D>& aerial) const {
    LinkReport r;
    r.users.resize(users_.size());
    evaluate(aerial, [&](std::size_t i, const UserLink& link) { r.users[i] = link; });
    return r;
}

double LinkBudget::qos(const std::optional<Position3D>& aerial) const {
    double sum = 0.0;
    evaluate(aerial, [&](std::size_t, const UserLink& link) { sum += link.throughput; });
    return sum;
}

AssociationMap associate_max_sinr(const NetworkState& state) {
    state.validate();
    const LinkReport r = LinkBudget(state).report(state.aerial_pos);
    AssociationMap m;
    m.serving.reserve(r.users.size());
    for (const auto& u : r.users) m.serving.push_back(u.serving);
    return m;
}

double aggregate_qos(const NetworkState& state) {
    if (state.users.empty()) return 0.0;
    state.validate();
    return LinkBudget(state).qos(state.aerial_pos);
}

double aggregate_qos(const NetworkState& state, const AssociationMap& assoc) {
    if (assoc.serving.size() != state.users.size())
        throw std::invalid_argument("association must list exactly one BS per user");
    double sum = 0.0;
    for (std::size_t i = 0; i < state.users.size(); ++i) sum += throughput(sinr(state.users[i], assoc.serving[i], state));
    return sum;
}

LinkReport link_report(const NetworkState& state) {
    state.validate();
    return LinkBudget(state).report(state.aerial_pos);
}

}  // namespace aerialq
