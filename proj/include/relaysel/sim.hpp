#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "relaysel/algorithms.hpp"
#include "relaysel/channel.hpp"

namespace relaysel {

inline constexpr std::uint64_t kDefaultSeed = 20200101;

struct ScenarioConfig {
  int scenario_id = 1;
  // Sources swept over ns_min, ns_min + ns_step, ..., ns_max.
  int ns_min = 0;
  int ns_max = 100;
  int ns_step = 5;
  // Relay count per curve. Empty means N_r = total_machines - N_s.
  std::vector<int> relay_counts;
  int total_machines = 100;
  std::vector<int> channels{100};
  std::vector<double> alphas{1e-4};
  int runs = 100;
  std::uint64_t seed = kDefaultSeed;
  std::vector<Algorithm> algorithms{Algorithm::kWrsa, Algorithm::kRrsa, Algorithm::kOrsa, Algorithm::kMrsa};
  QuotaMode quota_mode = QuotaMode::kJoint;
  int jobs = 0;  // 0: hardware concurrency
  double side_m = 590.0;
  RadioParams radio;  // lte_channel_count and fading_factor are overridden per curve

  // Throws std::invalid_argument describing the first bad field.
  void validate() const;
};

// Defaults for the five experiments. Throws std::invalid_argument with
// "unknown scenario" for ids outside 1..5.
ScenarioConfig scenario_preset(int id);

// Scenario id named by a JSON config, if any.
std::optional<int> config_scenario_id(std::string_view json_text);

// Overrides fields of `config` from a JSON object whose keys match the CLI
// flag names (runs, seed, ns-min, ns-max, ns-step, relays, channels, alpha,
// algos, strict-quota, relaxed-quota, jobs, fading-probability). The "id"
// key selects the preset and is ignored here.
void apply_config_json(ScenarioConfig& config, std::string_view json_text);

struct SweepPoint {
  int n_sources = 0;
  int n_relays = 0;
  int channels = 0;
  double alpha = 0.0;
  int relay_curve = -1;  // fixed relay count of the curve, -1 when derived from N_s
};

// Curves in (relays, channels, alpha) order, N_s ascending within a curve.
std::vector<SweepPoint> sweep_points(const ScenarioConfig& config);

// Run r of every sweep point uses seed + r, so curves share placements.
std::uint64_t run_seed(const ScenarioConfig& config, int run);

// Link tables for one Monte-Carlo run at one sweep point.
CapacityTables make_tables(const ScenarioConfig& config, const SweepPoint& point, int run);

// Runs one selector; WRSA and RRSA draw their randomness from `seed`.
Matching run_algorithm(Algorithm algorithm, const CapacityTables& tables, int q_bs, QuotaMode mode,
                       std::uint64_t seed);

struct MetricRow {
  int scenario = 0;
  Algorithm algorithm = Algorithm::kWrsa;
  int n_sources = 0;
  int n_relays = 0;
  int channels = 0;
  double alpha = 0.0;
  double mean_capacity = 0.0;  // bit/s, mean over matched sources, then over runs
  double std_capacity = 0.0;   // across runs
  double mean_unmatched = 0.0;
  double mean_objective = 0.0;  // total matched capacity, mean over runs
  int run_count = 0;
};

struct RunMetrics {
  std::vector<MetricRow> rows;  // CSV order
};

RunMetrics run_scenario(const ScenarioConfig& config);

void write_csv(const RunMetrics& metrics, std::ostream& out);
// Throws std::runtime_error naming the path when it cannot be written.
void write_csv(const RunMetrics& metrics, const std::filesystem::path& path);

}  // namespace relaysel
