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

// aerialq: scenario runner, oracle map and paired comparison driver.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "aerialq/format.hpp"
#include "aerialq/metrics.hpp"
#include "aerialq/oracle.hpp"
#include "aerialq/scenario.hpp"

namespace fs = std::filesystem;
using aerialq::ScenarioConfig;

namespace {

constexpr const char* kOutDirEnv = "AERIALQ_OUT_DIR";

struct CommonOptions {
    std::string preset = "full";
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    std::optional<std::string> mode;
    std::optional<double> duration;
    std::optional<std::size_t> users;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--preset", o.preset, "Base parameter set")->check(CLI::IsMember({"full", "paper", "desk"}));
    cmd->add_option("--config", o.config_path, "JSON config overlaid on the preset")->check(CLI::ExistingFile);
    cmd->add_option("--seed", o.seed, "Scenario seed");
    cmd->add_option("--out-dir", o.out_dir, std::string("Output directory (default: $") + kOutDirEnv + " or ./out)");
    cmd->add_option("--mode", o.mode, "ground19 or aerial18plus1");
    cmd->add_option("--duration", o.duration, "Simulated seconds");
    cmd->add_option("--users", o.users, "Number of users");
}

ScenarioConfig resolve_config(const CommonOptions& o) {
    ScenarioConfig cfg = aerialq::preset_by_name(o.preset);
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw aerialq::IoError("cannot open config " + o.config_path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::parse_error& e) {
            throw aerialq::ConfigError(o.config_path + ": " + e.what());
        }
        aerialq::apply_json(cfg, j);
    }
    if (o.seed) cfg.seed = *o.seed;
    if (o.mode) cfg.mode = aerialq::parse_baseline_mode(*o.mode);
    if (o.duration) cfg.sim_duration = *o.duration;
    if (o.users) cfg.n_users = *o.users;
    cfg.validate();
    return cfg;
}

fs::path resolve_out_dir(const CommonOptions& o) {
    if (!o.out_dir.empty()) return o.out_dir;
    if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') return env;
    return "out";
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw aerialq::IoError("cannot open " + p.string() + " for writing");
    out << text;
    if (!out) throw aerialq::IoError("failed writing " + p.string());
}

int cmd_run(const CommonOptions& o, const std::string& qtable_in, const std::string& qtable_out) {
    const ScenarioConfig cfg = resolve_config(o);
    const fs::path dir = resolve_out_dir(o);
    std::optional<aerialq::QTable> warm;
    if (!qtable_in.empty()) warm = aerialq::QTable::load(qtable_in);

    const auto t0 = std::chrono::steady_clock::now();
    const aerialq::ScenarioResult result = aerialq::run_scenario(cfg, std::move(warm));
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    aerialq::emit_outputs(cfg, result, dir);
    // Wall-clock time lives outside summary.json so that file stays reproducible.
    write_text(dir / "timing.json", nlohmann::json{{"wall_clock_s", wall}}.dump(2) + "\n");
    if (!qtable_out.empty() && result.q) result.q->save(qtable_out);

    std::cout << fmt::format("{} slots, qos_th {:.3f}, {} learning sessions, outputs in {}\n",
                             result.records.size(), result.qos_th, result.learning_sessions, dir.string());
    return 0;
}

int cmd_oracle(const CommonOptions& o, double at_time, unsigned threads) {
    const ScenarioConfig cfg = resolve_config(o);
    const fs::path dir = resolve_out_dir(o);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw aerialq::IoError("cannot create output directory " + dir.string() + ": " + ec.message());

    const aerialq::OracleResult r = aerialq::oracle_at(cfg, at_time, threads);
    const aerialq::PlacementGrid grid = cfg.grid();
    aerialq::write_oracle_csv(dir / "oracle.csv", r, grid);
    const aerialq::Position3D best = grid.position(r.best_state);
    std::cout << fmt::format("best state {} at ({}, {}, {}) qos {:.6f}; map in {}\n", r.best_state,
                             aerialq::fmt_num(best.x), aerialq::fmt_num(best.y), aerialq::fmt_num(best.h), r.best_qos,
                             (dir / "oracle.csv").string());
    return 0;
}

struct SeedComparison {
    std::uint64_t seed = 0;
    double qos_th = 0.0;
    double ground_mean_qos = 0.0;
    double aerial_mean_qos = 0.0;
    std::size_t low_slots = 0;  // slots where the ground baseline is below threshold
    double ground_low_qos = 0.0;
    double aerial_low_qos = 0.0;
    double ground_se = 0.0;
    double aerial_se = 0.0;
    double ground_median_sinr_db = 0.0;
    double aerial_median_sinr_db = 0.0;
};

SeedComparison compare_seed(ScenarioConfig cfg, const fs::path& dir) {
    SeedComparison c;
    c.seed = cfg.seed;
    cfg.mode = aerialq::BaselineMode::kGround;
    const auto g = aerialq::run_scenario(cfg);
    aerialq::emit_outputs(cfg, g, dir / "ground19");
    cfg.mode = aerialq::BaselineMode::kAerial;
    const auto a = aerialq::run_scenario(cfg);
    aerialq::emit_outputs(cfg, a, dir / "aerial18plus1");

    c.qos_th = g.qos_th;
    for (std::size_t k = 0; k < g.records.size(); ++k) {
        c.ground_mean_qos += g.records[k].qos;
        c.aerial_mean_qos += a.records[k].qos;
        if (g.records[k].qos < g.qos_th) {
            ++c.low_slots;
            c.ground_low_qos += g.records[k].qos;
            c.aerial_low_qos += a.records[k].qos;
        }
    }
    const auto n = static_cast<double>(g.records.size());
    c.ground_mean_qos /= n;
    c.aerial_mean_qos /= n;
    if (c.low_slots > 0) {
        c.ground_low_qos /= static_cast<double>(c.low_slots);
        c.aerial_low_qos /= static_cast<double>(c.low_slots);
    }
    c.ground_se = aerialq::spectral_efficiency_summary(g.records);
    c.aerial_se = aerialq::spectral_efficiency_summary(a.records);
    c.ground_median_sinr_db = aerialq::sinr_cdf(g.records).median();
    c.aerial_median_sinr_db = aerialq::sinr_cdf(a.records).median();
    return c;
}

int cmd_compare(const CommonOptions& o, std::size_t n_seeds, unsigned jobs) {
    const ScenarioConfig base = resolve_config(o);
    const fs::path dir = resolve_out_dir(o);
    if (n_seeds == 0) throw aerialq::ConfigError("--seeds must be positive");
    jobs = std::max(1u, jobs);

    std::vector<SeedComparison> rows(n_seeds);
    std::vector<std::future<void>> pending;
    std::size_t next = 0;
    auto launch = [&](std::size_t i) {
        ScenarioConfig cfg = base;
        cfg.seed = base.seed + i;
        return std::async(std::launch::async, [cfg, i, &rows, &dir] {
            rows[i] = compare_seed(cfg, dir / fmt::format("seed_{}", cfg.seed));
        });
    };
    while (next < n_seeds || !pending.empty()) {
        while (next < n_seeds && pending.size() < jobs) pending.push_back(launch(next++));
        pending.front().get();
        pending.erase(pending.begin());
    }

    std::ostringstream csv;
    csv << "seed,qos_th,ground_mean_qos,aerial_mean_qos,low_slots,ground_low_qos,aerial_low_qos,"
           "ground_spectral_efficiency,aerial_spectral_efficiency,ground_median_sinr_db,aerial_median_sinr_db\n";
    std::size_t with_low = 0;
    std::size_t wins = 0;
    for (const auto& r : rows) {
        using aerialq::fmt_num;
        csv << r.seed << ',' << fmt_num(r.qos_th) << ',' << fmt_num(r.ground_mean_qos) << ','
            << fmt_num(r.aerial_mean_qos) << ',' << r.low_slots << ',' << fmt_num(r.ground_low_qos) << ','
            << fmt_num(r.aerial_low_qos) << ',' << fmt_num(r.ground_se) << ',' << fmt_num(r.aerial_se) << ','
            << fmt_num(r.ground_median_sinr_db) << ',' << fmt_num(r.aerial_median_sinr_db) << '\n';
        if (r.low_slots > 0) {
            ++with_low;
            wins += r.aerial_low_qos >= r.ground_low_qos ? 1 : 0;
        }
    }
    write_text(dir / "compare.csv", csv.str());
    std::cout << fmt::format("{} seeds; aerial >= ground at below-threshold slots in {}/{} seeds; merged in {}\n",
                             n_seeds, wins, with_low, (dir / "compare.csv").string());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Aerial base-station placement by tabular Q-learning"};
    app.require_subcommand(1);

    CommonOptions run_opts;
    std::string qtable_in;
    std::string qtable_out;
    auto* run = app.add_subcommand("run", "Simulate one scenario and write CSV/summary outputs");
    add_common(run, run_opts);
    run->add_option("--qtable-in", qtable_in, "Warm-start Q-table file")->check(CLI::ExistingFile);
    run->add_option("--qtable-out", qtable_out, "Write the final Q-table here");

    CommonOptions oracle_opts;
    double at_time = 0.0;
    unsigned oracle_threads = 1;
    auto* oracle = app.add_subcommand("oracle", "Exhaustive QoS map over the placement grid for one snapshot");
    add_common(oracle, oracle_opts);
    oracle->add_option("--time", at_time, "Snapshot time in seconds")->check(CLI::NonNegativeNumber);
    oracle->add_option("--threads", oracle_threads, "Worker threads");

    CommonOptions compare_opts;
    std::size_t n_seeds = 20;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* compare = app.add_subcommand("compare", "Paired ground vs aerial runs over consecutive seeds");
    add_common(compare, compare_opts);
    compare->add_option("--seeds", n_seeds, "Number of seeds, starting at --seed");
    compare->add_option("--jobs", jobs, "Seeds simulated in parallel");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_opts, qtable_in, qtable_out);
        if (oracle->parsed()) return cmd_oracle(oracle_opts, at_time, oracle_threads);
        if (compare->parsed()) return cmd_compare(compare_opts, n_seeds, jobs);
    } catch (const aerialq::ConfigError& e) {
        std::cerr << "aerialq: configuration error: " << e.what() << '\n';
        return 2;
    } catch (const aerialq::IoError& e) {
        std::cerr << "aerialq: I/O error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "aerialq: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
