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

#include "aerialq/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "aerialq/format.hpp"

namespace aerialq {

SinrCdf::SinrCdf(std::vector<double> samples_db) : sorted_(std::move(samples_db)) {
    std::sort(sorted_.begin(), sorted_.end());
}

double SinrCdf::at(double x_db) const {
    if (sorted_.empty()) return 0.0;
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x_db);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double SinrCdf::quantile(double p) const {
    if (sorted_.empty()) throw std::invalid_argument("quantile of an empty CDF");
    // Lower empirical quantile: smallest sample with CDF >= p.
    const double n = static_cast<double>(sorted_.size());
    const auto k = static_cast<std::size_t>(std::max(0.0, std::ceil(p * n) - 1.0));
    return sorted_[std::min(k, sorted_.size() - 1)];
}

std::vector<std::pair<double, double>> SinrCdf::table() const {
    std::vector<std::pair<double, double>> rows;
    if (sorted_.empty()) return rows;
    const auto lo = static_cast<long long>(std::floor(sorted_.front() * 10.0));
    const auto hi = static_cast<long long>(std::ceil(sorted_.back() * 10.0));
    rows.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long long k = lo; k <= hi; ++k) {
        const double x = static_cast<double>(k) / 10.0;
        rows.emplace_back(x, at(x));
    }
    return rows;
}

std::vector<double> time_averaged_sinr_db(std::span<const TimeSlotRecord> records) {
    if (records.empty()) return {};
    const std::size_t n_users = records.front().sinr.size();
    std::vector<double> sum(n_users, 0.0);
    for (const auto& r : records) {
        if (r.sinr.size() != n_users) throw std::invalid_argument("user count changes between records");
        for (std::size_t i = 0; i < n_users; ++i) sum[i] += r.sinr[i];
    }
    std::vector<double> out;
    out.reserve(n_users);
    for (double s : sum) out.push_back(10.0 * std::log10(s / static_cast<double>(records.size())));
    return out;
}

SinrCdf sinr_cdf(std::span<const TimeSlotRecord> records) {
    if (records.empty()) throw std::invalid_argument("SINR CDF needs at least one record");
    return SinrCdf(time_averaged_sinr_db(records));
}

double spectral_efficiency_summary(std::span<const TimeSlotRecord> records) {
    if (records.empty()) throw std::invalid_argument("spectral efficiency needs at least one record");
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& r : records) {
        for (double s : r.sinr) sum += throughput(s);
        n += r.sinr.size();
    }
    return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

nlohmann::json summarize(const ScenarioConfig& cfg, const ScenarioResult& result) {
    nlohmann::json j;
    j["config"] = to_json(cfg);
    j["seed"] = cfg.seed;
    j["slots"] = result.records.size();
    j["qos_th"] = result.qos_th;
    j["learning_sessions"] = result.learning_sessions;
    j["reward_trace_length"] = result.reward_trace.size();

    const auto& recs = result.records;
    if (recs.empty()) {
        j["qos"] = nullptr;
        j["mean_spectral_efficiency"] = nullptr;
        j["median_sinr_db"] = nullptr;
        j["triggered_slots"] = 0;
        j["slots_below_threshold"] = 0;
        return j;
    }
    double sum = 0.0;
    double lo = recs.front().qos;
    double hi = recs.front().qos;
    std::size_t triggered = 0;
    std::size_t below = 0;
    for (const auto& r : recs) {
        sum += r.qos;
        lo = std::min(lo, r.qos);
        hi = std::max(hi, r.qos);
        triggered += r.learning_triggered ? 1 : 0;
        below += r.qos < r.qos_th ? 1 : 0;
    }
    j["qos"] = {{"mean", sum / static_cast<double>(recs.size())}, {"min", lo}, {"max", hi}};
    j["triggered_slots"] = triggered;
    j["slots_below_threshold"] = below;
    j["mean_spectral_efficiency"] = spectral_efficiency_summary(recs);
    const SinrCdf cdf = sinr_cdf(recs);
    j["median_sinr_db"] = cdf.empty() ? nlohmann::json(nullptr) : nlohmann::json(cdf.median());
    if (recs.back().aerial_pos) {
        const Position3D& p = *recs.back().aerial_pos;
        j["final_aerial"] = {{"x", p.x}, {"y", p.y}, {"h", p.h}};
    } else {
        j["final_aerial"] = nullptr;
    }
    return j;
}

OutputPaths output_paths(const std::filesystem::path& dir) {
    return {dir / "timeslots.csv", dir / "sinr_cdf.csv", dir / "reward_trace.csv", dir / "summary.json"};
}

namespace {

std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoError("cannot open " + p.string() + " for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& p) {
    out.flush();
    if (!out) throw IoError("failed writing " + p.string());
}

}  // namespace

OutputPaths emit_outputs(const ScenarioConfig& cfg, const ScenarioResult& result, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    const OutputPaths paths = output_paths(dir);

    {
        auto out = open_out(paths.timeslots);
        out << "t,qos,qos_th,aerial_x,aerial_y,aerial_h,triggered\n";
        for (const auto& r : result.records) {
            out << fmt_num(r.t) << ',' << fmt_num(r.qos) << ',' << fmt_num(r.qos_th) << ',';
            if (r.aerial_pos)
                out << fmt_num(r.aerial_pos->x) << ',' << fmt_num(r.aerial_pos->y) << ',' << fmt_num(r.aerial_pos->h);
            else
                out << ",,";
            out << ',' << (r.learning_triggered ? 1 : 0) << '\n';
        }
        finish(out, paths.timeslots);
    }
    {
        auto out = open_out(paths.sinr_cdf);
        out << "sinr_db,cdf\n";
        if (!result.records.empty()) {
            for (const auto& [x, p] : sinr_cdf(result.records).table()) out << fmt_num(x) << ',' << fmt_num(p) << '\n';
        }
        finish(out, paths.sinr_cdf);
    }
    {
        auto out = open_out(paths.reward_trace);
        out << "iteration,reward\n";
        for (std::size_t i = 0; i < result.reward_trace.size(); ++i)
            out << i << ',' << fmt_num(result.reward_trace[i]) << '\n';
        finish(out, paths.reward_trace);
    }
    {
        auto out = open_out(paths.summary);
        out << summarize(cfg, result).dump(2) << '\n';
        finish(out, paths.summary);
    }
    return paths;
}

}  // namespace aerialq
