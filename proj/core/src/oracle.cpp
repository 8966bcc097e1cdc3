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

#include "aerialq/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <thread>

#include "aerialq/format.hpp"

namespace aerialq {

OracleResult exhaustive_search(const NetworkState& snapshot, const PlacementGrid& grid, unsigned threads) {
    if (grid.size() == 0) throw ConfigError("placement grid is empty");
    OracleResult r;
    r.qos_per_state.assign(grid.size(), 0.0);

    auto score = [&](std::size_t begin, std::size_t end) {
        NetworkState probe = snapshot;
        for (std::size_t s = begin; s < end; ++s) {
            probe.aerial_pos = grid.position(s);
            r.qos_per_state[s] = aggregate_qos(probe);
        }
    };

    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::min<std::size_t>(grid.size(), 64)));
    if (threads == 1) {
        score(0, grid.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (grid.size() + threads - 1) / threads;
        for (std::size_t begin = 0; begin < grid.size(); begin += chunk)
            pool.emplace_back(score, begin, std::min(grid.size(), begin + chunk));
    }

    r.best_state = 0;
    r.best_qos = r.qos_per_state[0];
    for (std::size_t s = 1; s < grid.size(); ++s) {
        if (r.qos_per_state[s] > r.best_qos) {
            r.best_qos = r.qos_per_state[s];
            r.best_state = s;
        }
    }
    return r;
}

void write_oracle_csv(std::ostream& out, const OracleResult& result, const PlacementGrid& grid) {
    out << "state,x,y,h,qos\n";
    for (std::size_t s = 0; s < result.qos_per_state.size(); ++s) {
        const Position3D p = grid.position(s);
        out << s << ',' << fmt_num(p.x) << ',' << fmt_num(p.y) << ',' << fmt_num(p.h) << ','
            << fmt_num(result.qos_per_state[s]) << '\n';
    }
}

void write_oracle_csv(const std::filesystem::path& path, const OracleResult& result, const PlacementGrid& grid) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    write_oracle_csv(out, result, grid);
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace aerialq
