#include "relaysel/sim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "json.hpp"
#include "relaysel/random.hpp"
#include "relaysel/topology.hpp"

namespace relaysel {

void ScenarioConfig::validate() const {
  if (scenario_id < 1 || scenario_id > 5) throw std::invalid_argument("unknown scenario " + std::to_string(scenario_id));
  if (ns_min < 0 || ns_max < ns_min) throw std::invalid_argument("source sweep must satisfy 0 <= ns-min <= ns-max");
  if (ns_step < 1) throw std::invalid_argument("ns-step must be >= 1");
  if (relay_counts.empty() && ns_max > total_machines)
    throw std::invalid_argument("ns-max exceeds the machine count of the scenario");
  for (int r : relay_counts)
    if (r < 0) throw std::invalid_argument("relay counts must be >= 0");
  if (channels.empty()) throw std::invalid_argument("at least one channel count is required");
  for (int c : channels)
    if (c < 1) throw std::invalid_argument("channel counts must be >= 1");
  if (alphas.empty()) throw std::invalid_argument("at least one fading factor is required");
  for (double a : alphas)
    if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("fading factors must lie in (0, 1]");
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  if (algorithms.empty()) throw std::invalid_argument("at least one algorithm is required");
  if (jobs < 0) throw std::invalid_argument("jobs must be >= 0");
  if (!(side_m > 0.0)) throw std::invalid_argument("side must be positive");
  radio.validate();
}

ScenarioConfig scenario_preset(int id) {
  ScenarioConfig c;
  c.scenario_id = id;
  switch (id) {
    case 1:
      break;
    case 2:
      c.relay_counts = {75};
      break;
    case 3:
      c.relay_counts = {25, 50, 75};
      c.algorithms = {Algorithm::kOrsa, Algorithm::kMrsa};
      break;
    case 4:
      c.relay_counts = {100};
      c.channels = {25, 50, 75};
      c.algorithms = {Algorithm::kOrsa, Algorithm::kMrsa};
      break;
    case 5:
      c.relay_counts = {100};
      c.channels = {25, 50, 75};
      c.alphas = {1e-8, 1e-6, 1e-4};
      c.algorithms = {Algorithm::kOrsa, Algorithm::kMrsa};
      break;
    default:
      throw std::invalid_argument("unknown scenario " + std::to_string(id));
  }
  return c;
}

namespace {

nlohmann::json parse_config(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
  return j;
}

}  // namespace

std::optional<int> config_scenario_id(std::string_view json_text) {
  const auto j = parse_config(json_text);
  if (!j.contains("id")) return std::nullopt;
  if (!j["id"].is_number_integer()) throw std::invalid_argument("config: \"id\" must be an integer");
  return j["id"].get<int>();
}

void apply_config_json(ScenarioConfig& config, std::string_view json_text) {
  using nlohmann::json;
  const json j = parse_config(json_text);
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "id") continue;
      if (key == "runs") config.runs = value.get<int>();
      else if (key == "seed") config.seed = value.get<std::uint64_t>();
      else if (key == "ns-min") config.ns_min = value.get<int>();
      else if (key == "ns-max") config.ns_max = value.get<int>();
      else if (key == "ns-step") config.ns_step = value.get<int>();
      else if (key == "relays") config.relay_counts = value.get<std::vector<int>>();
      else if (key == "channels") config.channels = value.get<std::vector<int>>();
      else if (key == "alpha") config.alphas = value.get<std::vector<double>>();
      else if (key == "jobs") config.jobs = value.get<int>();
      else if (key == "fading-probability") config.radio.fading_probability = value.get<double>();
      else if (key == "strict-quota") {
        if (value.get<bool>()) config.quota_mode = QuotaMode::kJoint;
      } else if (key == "relaxed-quota") {
        if (value.get<bool>()) config.quota_mode = QuotaMode::kDirectOnly;
      } else if (key == "algos") {
        config.algorithms.clear();
        for (const auto& a : value) config.algorithms.push_back(parse_algorithm(a.get<std::string>()));
      } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

std::vector<SweepPoint> sweep_points(const ScenarioConfig& config) {
  std::vector<int> curves = config.relay_counts;
  if (curves.empty()) curves.push_back(-1);
  std::vector<SweepPoint> out;
  for (int relays : curves)
    for (int ch : config.channels)
      for (double alpha : config.alphas)
        for (int ns = config.ns_min; ns <= config.ns_max; ns += config.ns_step) {
          SweepPoint p;
          p.n_sources = ns;
          p.n_relays = relays < 0 ? config.total_machines - ns : relays;
          p.channels = ch;
          p.alpha = alpha;
          p.relay_curve = relays;
          out.push_back(p);
        }
  return out;
}

std::uint64_t run_seed(const ScenarioConfig& config, int run) {
  return config.seed + static_cast<std::uint64_t>(run);
}

CapacityTables make_tables(const ScenarioConfig& config, const SweepPoint& point, int run) {
  const std::uint64_t seed = run_seed(config, run);
  TopologyConfig topo;
  topo.n_sources = point.n_sources;
  topo.n_relays = point.n_relays;
  topo.side_m = config.side_m;
  RadioParams radio = config.radio;
  radio.lte_channel_count = point.channels;
  radio.fading_factor = point.alpha;
  const Network net = generate(topo, radio, seed);
  return build_capacity_tables(net, radio, seed);
}

Matching run_algorithm(Algorithm algorithm, const CapacityTables& tables, int q_bs, QuotaMode mode,
                       std::uint64_t seed) {
  switch (algorithm) {
    case Algorithm::kOrsa:
      return orsa(tables, q_bs, mode);
    case Algorithm::kMrsa:
      return mrsa(tables, q_bs);
    case Algorithm::kWrsa: {
      std::vector<int> order(tables.n_sources());
      std::iota(order.begin(), order.end(), 0);
      auto rng = make_stream(seed, Stream::kArrivalOrder);
      std::shuffle(order.begin(), order.end(), rng);
      return wrsa(tables, q_bs, order);
    }
    case Algorithm::kRrsa: {
      auto rng = make_stream(seed, Stream::kRandomSelection);
      return rrsa(tables, q_bs, rng);
    }
  }
  throw std::logic_error("run_algorithm: unhandled algorithm");
}

namespace {

struct RunSample {
  double mean_capacity = 0.0;
  double objective = 0.0;
  int unmatched = 0;
};

// samples[a][r] for algorithm a, run r.
using PointSamples = std::vector<std::vector<RunSample>>;

PointSamples run_point(const ScenarioConfig& config, const SweepPoint& point, int jobs) {
  const int n_alg = static_cast<int>(config.algorithms.size());
  PointSamples samples(n_alg, std::vector<RunSample>(config.runs));

  auto work = [&](int run) {
    const CapacityTables tables = make_tables(config, point, run);
    for (int a = 0; a < n_alg; ++a) {
      const Matching m =
          run_algorithm(config.algorithms[a], tables, point.channels, config.quota_mode, run_seed(config, run));
      RunSample& s = samples[a][run];
      s.objective = objective(m);
      const int matched = m.matched_count();
      s.unmatched = m.unmatched_count();
      s.mean_capacity = matched > 0 ? s.objective / matched : 0.0;
    }
  };

  if (jobs <= 1) {
    for (int r = 0; r < config.runs; ++r) work(r);
    return samples;
  }
  // Strided runs per worker, results in fixed slots.
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (int r = w; r < config.runs; r += jobs) work(r);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return samples;
}

}  // namespace

RunMetrics run_scenario(const ScenarioConfig& config) {
  config.validate();
  int jobs = config.jobs;
  if (jobs == 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min(jobs, config.runs);

  const auto points = sweep_points(config);
  const int n_alg = static_cast<int>(config.algorithms.size());
  // rows_by_alg[a] keeps sweep order.
  std::vector<std::vector<MetricRow>> rows_by_alg(n_alg);

  for (const SweepPoint& point : points) {
    const PointSamples samples = run_point(config, point, jobs);
    for (int a = 0; a < n_alg; ++a) {
      MetricRow row;
      row.scenario = config.scenario_id;
      row.algorithm = config.algorithms[a];
      row.n_sources = point.n_sources;
      row.n_relays = point.n_relays;
      row.channels = point.channels;
      row.alpha = point.alpha;
      row.run_count = config.runs;
      double cap = 0.0, obj = 0.0, unmatched = 0.0;
      for (const RunSample& s : samples[a]) {
        cap += s.mean_capacity;
        obj += s.objective;
        unmatched += s.unmatched;
      }
      const double n = config.runs;
      row.mean_capacity = cap / n;
      row.mean_objective = obj / n;
      row.mean_unmatched = unmatched / n;
      if (config.runs > 1) {
        double ss = 0.0;
        for (const RunSample& s : samples[a]) ss += (s.mean_capacity - row.mean_capacity) * (s.mean_capacity - row.mean_capacity);
        row.std_capacity = std::sqrt(ss / (n - 1.0));
      }
      rows_by_alg[a].push_back(row);
    }
  }

  // Algorithms in canonical order, each followed by its curves.
  std::vector<int> order(n_alg);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return config.algorithms[a] < config.algorithms[b]; });
  RunMetrics out;
  for (int a : order)
    out.rows.insert(out.rows.end(), rows_by_alg[a].begin(), rows_by_alg[a].end());
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

void write_csv(const RunMetrics& metrics, std::ostream& out) {
  out << "scenario,algorithm,N_s,N_r,channels,alpha,mean_capacity,std_capacity,mean_unmatched\n";
  for (const MetricRow& r : metrics.rows) {
    out << r.scenario << ',' << to_string(r.algorithm) << ',' << r.n_sources << ',' << r.n_relays << ','
        << r.channels << ',' << format_double(r.alpha) << ',' << format_double(r.mean_capacity) << ','
        << format_double(r.std_capacity) << ',' << format_double(r.mean_unmatched) << '\n';
  }
}

void write_csv(const RunMetrics& metrics, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_csv(metrics, f);
  f.flush();
  if (!f) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace relaysel
