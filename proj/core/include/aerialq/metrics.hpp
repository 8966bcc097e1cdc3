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

#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "aerialq/scenario.hpp"

namespace aerialq {

/// Empirical CDF of per-user SINR averaged (linearly) over time, in dB.
class SinrCdf {
public:
    explicit SinrCdf(std::vector<double> samples_db);

    /// Fraction of samples <= x_db.
    [[nodiscard]] double at(double x_db) const;
    [[nodiscard]] double quantile(double p) const;
    [[nodiscard]] double median() const { return quantile(0.5); }
    [[nodiscard]] const std::vector<double>& samples() const { return sorted_; }
    [[nodiscard]] bool empty() const { return sorted_.empty(); }

    /// (sinr_db, cdf) rows on a 0.1 dB lattice spanning the samples.
    [[nodiscard]] std::vector<std::pair<double, double>> table() const;

private:
    std::vector<double> sorted_;
};

/// Per-user time-averaged SINR in dB across all records.
[[nodiscard]] std::vector<double> time_averaged_sinr_db(std::span<const TimeSlotRecord> records);

/// Throws std::invalid_argument for empty records.
[[nodiscard]] SinrCdf sinr_cdf(std::span<const TimeSlotRecord> records);

/// Mean per-user spectral efficiency over users and slots, bits/s/Hz.
/// Throws std::invalid_argument for empty records.
[[nodiscard]] double spectral_efficiency_summary(std::span<const TimeSlotRecord> records);

/// Deterministic summary document: config echo, seed and aggregate statistics.
[[nodiscard]] nlohmann::json summarize(const ScenarioConfig& cfg, const ScenarioResult& result);

struct OutputPaths {
    std::filesystem::path timeslots;
    std::filesystem::path sinr_cdf;
    std::filesystem::path reward_trace;
    std::filesystem::path summary;
};

[[nodiscard]] OutputPaths output_paths(const std::filesystem::path& dir);

/// Writes timeslots.csv, sinr_cdf.csv, reward_trace.csv and summary.json
/// into `dir` (created if missing). Output is a pure function of the inputs.
OutputPaths emit_outputs(const ScenarioConfig& cfg, const ScenarioResult& result, const std::filesystem::path& dir);

}  // namespace aerialq
