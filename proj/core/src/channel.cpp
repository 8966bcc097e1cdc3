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

#include "aerialq/channel.hpp"

#include <cmath>
#include <numbers>

namespace aerialq {

void AtgEnvironment::validate() const {
    if (!(kappa > 0.0)) throw ConfigError("kappa must be positive");
    if (!(zeta > 0.0)) throw ConfigError("zeta must be positive");
    if (!(eta_los_db >= 0.0 && eta_nlos_db >= eta_los_db))
        throw ConfigError("expected 0 <= eta_los <= eta_nlos");
}

void RadioParams::validate() const {
    if (!(carrier_freq_hz > 0.0) || !std::isfinite(carrier_freq_hz))
        throw ConfigError("carrier frequency must be positive");
    if (!std::isfinite(noise_power_dbm)) throw ConfigError("noise power must be finite");
    if (!std::isfinite(ground_pathloss_exponent) || !(ground_pathloss_exponent > 0.0))
        throw ConfigError("ground path-loss exponent must be positive");
    if (!std::isfinite(ground_ref_loss_db)) throw ConfigError("ground reference loss must be finite");
    if (!(user_height_m >= 0.0) || !std::isfinite(user_height_m))
        throw ConfigError("user height must be non-negative");
}

double elevation_angle(const Position3D& aerial, const Position2D& user, double user_height_m) {
    const double l = horizontal_distance(aerial.ground(), user);
    // atan2 yields exactly pi/2 when l == 0.
    return std::atan2(aerial.h - user_height_m, l);
}

double p_los(double theta_rad, const AtgEnvironment& env) {
    const double theta_deg = theta_rad * (180.0 / std::numbers::pi);
    const double exponent = env.form == LosExponentForm::kShiftedAngle ? -env.zeta * (theta_deg - env.kappa)
                                                                        : -env.zeta * theta_deg - env.kappa;
    return 1.0 / (1.0 + env.kappa * std::exp(exponent));
}

double free_space_pathloss(double distance_m, double carrier_freq_hz) {
    return 20.0 * std::log10(4.0 * std::numbers::pi * carrier_freq_hz * distance_m / kSpeedOfLight);
}

double atg_pathloss(const Position3D& aerial, const Position2D& user, const AtgEnvironment& env,
                    const RadioParams& radio) {
    const double d = distance_3d(aerial, {user.x, user.y, radio.user_height_m});
    if (!(d > 0.0)) throw GeometryError("air-to-ground link has zero length");
    const double los = p_los(elevation_angle(aerial, user, radio.user_height_m), env);
    return free_space_pathloss(d, radio.carrier_freq_hz) + los * env.eta_los_db + (1.0 - los) * env.eta_nlos_db;
}

double ground_pathloss(const GroundBS& bs, const Position2D& user, const RadioParams& radio) {
    const double d = distance_3d(bs.pos, {user.x, user.y, radio.user_height_m});
    if (!(d > 0.0)) throw GeometryError("terrestrial link has zero length");
    return radio.ground_ref_loss_db + 10.0 * radio.ground_pathloss_exponent * std::log10(d);
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

}  // namespace aerialq
