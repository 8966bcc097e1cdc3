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

#include "aerialq/deployment.hpp"
#include "aerialq/geometry.hpp"

namespace aerialq {

inline constexpr double kSpeedOfLight = 299'792'458.0;

/// How the LoS-probability exponent is grouped.
enum class LosExponentForm {
    /// exp(-zeta * (theta_deg - kappa)), the sigmoid of the cited model family.
    kShiftedAngle,
    /// exp(-zeta * theta_deg - kappa), the grouping as literally typeset.
    kLiteral,
};

/// Air-to-ground propagation environment. Defaults are the urban set.
struct AtgEnvironment {
    double kappa = 9.61;
    double zeta = 0.16;
    double eta_los_db = 1.0;
    double eta_nlos_db = 20.0;
    LosExponentForm form = LosExponentForm::kShiftedAngle;

    void validate() const;
};

struct RadioParams {
    double carrier_freq_hz = 2.0e9;
    double noise_power_dbm = -104.0;
    double ground_pathloss_exponent = 3.5;
    double ground_ref_loss_db = 38.4;
    /// Receiver height of every user; 0 puts users on the ground plane.
    double user_height_m = 0.0;

    void validate() const;
};

/// arctan(h / l) between the aerial BS and a ground user; pi/2 directly overhead.
[[nodiscard]] double elevation_angle(const Position3D& aerial, const Position2D& user, double user_height_m = 0.0);

/// Probability that the air-to-ground link is line-of-sight, theta in radians.
[[nodiscard]] double p_los(double theta_rad, const AtgEnvironment& env);

/// Mean air-to-ground path loss in dB: free-space loss plus the LoS/NLoS
/// excess weighted by p_los. Throws GeometryError for a zero-length link.
[[nodiscard]] double atg_pathloss(const Position3D& aerial, const Position2D& user, const AtgEnvironment& env,
                                  const RadioParams& radio);

/// Free-space path loss 20 log10(4 pi f d / c).
[[nodiscard]] double free_space_pathloss(double distance_m, double carrier_freq_hz);

/// Log-distance terrestrial loss: ref + 10 n log10(d), d in meters.
[[nodiscard]] double ground_pathloss(const GroundBS& bs, const Position2D& user, const RadioParams& radio);

[[nodiscard]] constexpr double received_power(double tx_power_dbm, double pathloss_db) {
    return tx_power_dbm - pathloss_db;
}

[[nodiscard]] double dbm_to_mw(double dbm);
[[nodiscard]] double mw_to_dbm(double mw);

}  // namespace aerialq
