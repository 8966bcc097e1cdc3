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
#include <filesystem>
#include <ostream>
#include <vector>

#include "aerialq/deployment.hpp"
#include "aerialq/radio.hpp"

namespace aerialq {

struct OracleResult {
    std::size_t best_state = 0;
    double best_qos = 0.0;
    std::vector<double> qos_per_state;
};

/// Brute-force maximizer of aggregate QoS over every grid position.
///
/// Each state is scored by a fresh aggregate_qos() call on a copy of the
/// snapshot with the aerial BS moved there; nothing is cached between
/// states. Ties resolve to the lowest state index. `threads` > 1 splits the
/// states into contiguous chunks; the result does not depend on it.
[[nodiscard]] OracleResult exhaustive_search(const NetworkState& snapshot, const PlacementGrid& grid,
                                             unsigned threads = 1);

/// CSV with header `state,x,y,h,qos`, one row per grid state.
void write_oracle_csv(std::ostream& out, const OracleResult& result, const PlacementGrid& grid);
void write_oracle_csv(const std::filesystem::path& path, const OracleResult& result, const PlacementGrid& grid);

}  // namespace aerialq
