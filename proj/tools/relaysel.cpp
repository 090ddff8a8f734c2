// Command-line front end: scenario sweeps, one-shot k-cardinality solves and
// instance dumps.

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relaysel/assignment.hpp"
#include "relaysel/sim.hpp"
#include "relaysel/topology.hpp"

namespace {

using namespace relaysel;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Matrix parse_matrix(const std::string& text, const std::string& path) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<double> row;
    std::string tok;
    while (fields >> tok) {
      double v = 0.0;
      const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        throw std::runtime_error(path + ":" + std::to_string(line_no) + ": not a number: '" + tok + "'");
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": row length differs from first row");
    rows.push_back(std::move(row));
  }
  Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows.front().size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  return m;
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

struct ScenarioFlags {
  int id = 0;
  std::optional<int> runs;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<int> ns_min;
  std::optional<int> ns_max;
  std::optional<int> ns_step;
  std::vector<int> relays;
  std::vector<int> channels;
  std::vector<double> alphas;
  std::vector<std::string> algos;
  bool strict_quota = false;
  bool relaxed_quota = false;
  std::string config_path;
  std::optional<int> jobs;
};

int run_scenario_command(const ScenarioFlags& f) {
  std::string text;
  if (!f.config_path.empty()) text = read_file(f.config_path);
  int id = f.id;
  if (id == 0 && !text.empty()) id = config_scenario_id(text).value_or(0);
  if (id == 0) throw std::runtime_error("scenario: --id (or an \"id\" key in --config) is required");

  ScenarioConfig config = scenario_preset(id);
  if (!text.empty()) apply_config_json(config, text);
  if (f.runs) config.runs = *f.runs;
  if (f.seed) config.seed = *f.seed;
  if (f.ns_min) config.ns_min = *f.ns_min;
  if (f.ns_max) config.ns_max = *f.ns_max;
  if (f.ns_step) config.ns_step = *f.ns_step;
  if (!f.relays.empty()) config.relay_counts = f.relays;
  if (!f.channels.empty()) config.channels = f.channels;
  if (!f.alphas.empty()) config.alphas = f.alphas;
  if (!f.algos.empty()) {
    config.algorithms.clear();
    for (const auto& a : f.algos) config.algorithms.push_back(parse_algorithm(a));
  }
  if (f.strict_quota && f.relaxed_quota) throw std::runtime_error("--strict-quota and --relaxed-quota are exclusive");
  if (f.strict_quota) config.quota_mode = QuotaMode::kJoint;
  if (f.relaxed_quota) config.quota_mode = QuotaMode::kDirectOnly;
  if (f.jobs) config.jobs = *f.jobs;

  const RunMetrics metrics = run_scenario(config);
  if (f.out.empty()) {
    write_csv(metrics, std::cout);
  } else {
    write_csv(metrics, std::filesystem::path(f.out));
  }
  return 0;
}

int run_solve_kcard(const std::string& matrix_path, int k) {
  KCardInstance inst;
  inst.weights = parse_matrix(read_file(matrix_path), matrix_path);
  inst.k = k;
  const KCardSolution sol = solve_kcard(inst);
  for (const auto& [i, j] : sol.edges) std::cout << "edge " << i << ' ' << j << ' ' << format_number(inst.weights(i, j)) << '\n';
  std::cout << "total_weight " << format_number(sol.total_weight) << '\n';
  return 0;
}

int run_instance(std::uint64_t seed, int ns, int nr, const std::string& out) {
  TopologyConfig topo;
  topo.n_sources = ns;
  topo.n_relays = nr;
  const Network net = generate(topo, RadioParams{}, seed);
  const std::string json = to_json(net);
  if (out.empty()) {
    std::cout << json << '\n';
    return 0;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + out + "' for writing");
  f << json << '\n';
  if (!f) throw std::runtime_error("failed writing '" + out + "'");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relay selection for uplink M2M networks"};
  app.require_subcommand(1);

  ScenarioFlags sf;
  auto* scenario = app.add_subcommand("scenario", "Run a Monte-Carlo scenario sweep and emit CSV");
  scenario->add_option("--id", sf.id, "Scenario preset (1..5)");
  scenario->add_option("--runs", sf.runs, "Monte-Carlo runs per sweep point");
  scenario->add_option("--seed", sf.seed, "Base seed; run r uses seed + r");
  scenario->add_option("--out", sf.out, "CSV output path (default: standard output)");
  scenario->add_option("--ns-min", sf.ns_min, "Smallest source count");
  scenario->add_option("--ns-max", sf.ns_max, "Largest source count");
  scenario->add_option("--ns-step", sf.ns_step, "Source count step");
  scenario->add_option("--relays", sf.relays, "Fixed relay count per curve")->delimiter(',');
  scenario->add_option("--channels", sf.channels, "LTE channel counts (BS quota)")->delimiter(',');
  scenario->add_option("--alpha", sf.alphas, "Fading factors")->delimiter(',');
  scenario->add_option("--algos", sf.algos, "Subset of orsa,mrsa,wrsa,rrsa")->delimiter(',');
  scenario->add_flag("--strict-quota", sf.strict_quota, "Charge relayed paths against the BS quota (default)");
  scenario->add_flag("--relaxed-quota", sf.relaxed_quota, "Only direct links consume BS channels in ORSA");
  scenario->add_option("--config", sf.config_path, "JSON file with the same keys as these flags");
  scenario->add_option("--jobs", sf.jobs, "Worker threads (0: all cores)");

  std::string matrix_path;
  int k = 0;
  auto* kcard = app.add_subcommand("solve-kcard", "Max-weight assignment with exactly k edges");
  kcard->add_option("--matrix", matrix_path, "Whitespace-separated weight matrix, one row per line")->required();
  kcard->add_option("--k", k, "Number of edges")->required();

  std::uint64_t inst_seed = kDefaultSeed;
  int inst_ns = 0, inst_nr = 0;
  std::string inst_out;
  auto* instance = app.add_subcommand("instance", "Dump a generated network as JSON");
  instance->add_option("--seed", inst_seed, "Placement/shadowing seed");
  instance->add_option("--ns", inst_ns, "Number of sources")->required();
  instance->add_option("--nr", inst_nr, "Number of relays")->required();
  instance->add_option("--out", inst_out, "Output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (scenario->parsed()) return run_scenario_command(sf);
    if (kcard->parsed()) return run_solve_kcard(matrix_path, k);
    if (instance->parsed()) return run_instance(inst_seed, inst_ns, inst_nr, inst_out);
  } catch (const std::exception& e) {
    std::cerr << "relaysel: error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
