#include "relaysel/topology.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "relaysel/random.hpp"

namespace relaysel {

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

void CapacityTables::validate() const {
  const int ns = n_sources();
  const int nr = n_relays();
  if (source_relay.rows() != ns || source_relay.cols() != nr)
    throw std::invalid_argument("CapacityTables: source_relay must be N_s x N_r");
  if (!faded.empty() && static_cast<int>(faded.size()) != ns)
    throw std::invalid_argument("CapacityTables: faded must have N_s entries");
  auto ok = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!std::all_of(source_relay.data().begin(), source_relay.data().end(), ok) ||
      !std::all_of(source_bs.begin(), source_bs.end(), ok) ||
      !std::all_of(relay_bs.begin(), relay_bs.end(), ok))
    throw std::invalid_argument("CapacityTables: capacities must be finite and >= 0");
}

Network generate(const TopologyConfig& config, const RadioParams& radio, std::uint64_t seed) {
  if (config.n_sources < 0 || config.n_relays < 0)
    throw std::invalid_argument("generate: negative machine count");
  if (!(config.side_m > 0.0)) throw std::invalid_argument("generate: side must be positive");

  Network net;
  net.side_m = config.side_m;
  net.bs = config.bs_position.value_or(Point{config.side_m / 2.0, config.side_m / 2.0});
  net.n_sources = config.n_sources;
  net.n_relays = config.n_relays;

  const int n = net.machine_count();
  auto placement = make_stream(seed, Stream::kPlacement);
  std::uniform_real_distribution<double> coord(0.0, config.side_m);
  net.machines.reserve(n);
  for (int m = 0; m < n; ++m) {
    const double x = coord(placement);
    const double y = coord(placement);
    net.machines.push_back({x, y});
  }

  // One shadowing draw per unordered pair (reciprocal channel).
  auto shadowing = make_stream(seed, Stream::kShadowing);
  std::normal_distribution<double> shadow(radio.shadow_mean_db, radio.shadow_std_db);
  net.gains = GainMatrix(n + 1);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const double d = std::max(distance(net.machines[a], net.machines[b]), kMinLinkDistance);
      net.gains.set(a, b,
                    path_gain(d, radio.wifi_freq_hz, radio.machine_height_m, radio.machine_height_m,
                              shadow(shadowing))
                        .gain);
    }
    const double d = std::max(distance(net.machines[a], net.bs), kMinLinkDistance);
    net.gains.set(a, n,
                  path_gain(d, radio.lte_freq_hz, radio.machine_height_m, radio.bs_height_m,
                            shadow(shadowing))
                      .gain);
  }
  return net;
}

CapacityTables build_capacity_tables(const Network& net, const RadioParams& params, std::uint64_t seed) {
  params.validate();
  const int ns = net.n_sources;
  const int nr = net.n_relays;
  const int bs = net.bs_id();
  const double threshold = params.rx_power_threshold_w();

  std::vector<int> active(ns);
  for (int i = 0; i < ns; ++i) active[i] = net.source_id(i);

  CapacityTables t;
  t.source_relay = Matrix(ns, nr);
  t.source_bs.assign(ns, 0.0);
  t.relay_bs.assign(nr, 0.0);
  t.faded.assign(ns, false);

  const double wifi_bw = params.wifi_bandwidth_hz();
  const double lte_bw = params.lte_bandwidth_hz();

  for (int i = 0; i < ns; ++i) {
    const int src = net.source_id(i);
    for (int j = 0; j < nr; ++j) {
      const int rel = net.relay_id(j);
      if (params.p_wifi_machine_w * net.gains.gain(src, rel) < threshold) continue;
      t.source_relay(i, j) = capacity(wifi_bw, sinr_wifi(src, rel, active, net.gains, params));
    }
  }
  for (int j = 0; j < nr; ++j) {
    const int rel = net.relay_id(j);
    if (params.p_lte_machine_w * net.gains.gain(rel, bs) < threshold) continue;
    t.relay_bs[j] = capacity(lte_bw, sinr_lte(rel, bs, net.gains, params));
  }

  // One coin per source, drawn whatever alpha is.
  auto fading = make_stream(seed, Stream::kFading);
  std::bernoulli_distribution coin(params.fading_probability);
  for (int i = 0; i < ns; ++i) {
    const int src = net.source_id(i);
    const bool hit = coin(fading);
    t.faded[i] = hit;
    if (params.p_lte_machine_w * net.gains.gain(src, bs) < threshold) continue;
    t.source_bs[i] =
        apply_fading(capacity(lte_bw, sinr_lte(src, bs, net.gains, params)), params.fading_factor, hit);
  }
  return t;
}

std::string to_json(const Network& net) {
  using nlohmann::json;
  json j;
  j["side_m"] = net.side_m;
  j["bs"] = {net.bs.x, net.bs.y};
  j["n_sources"] = net.n_sources;
  j["n_relays"] = net.n_relays;
  json machines = json::array();
  for (int m = 0; m < net.machine_count(); ++m) {
    machines.push_back({{"id", m},
                        {"role", m < net.n_sources ? "source" : "relay"},
                        {"x", net.machines[m].x},
                        {"y", net.machines[m].y}});
  }
  j["machines"] = std::move(machines);
  // Upper triangle including the BS column, row-major.
  json gains = json::array();
  const int n = net.gains.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) gains.push_back(net.gains.gain(a, b));
  j["gains"] = std::move(gains);
  return j.dump(2);
}

Network network_from_json(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("network_from_json: ") + e.what());
  }
  Network net;
  try {
    net.side_m = j.at("side_m").get<double>();
    net.bs = {j.at("bs").at(0).get<double>(), j.at("bs").at(1).get<double>()};
    net.n_sources = j.at("n_sources").get<int>();
    net.n_relays = j.at("n_relays").get<int>();
    const auto& machines = j.at("machines");
    if (static_cast<int>(machines.size()) != net.machine_count())
      throw std::invalid_argument("network_from_json: machine count mismatch");
    for (const auto& m : machines) net.machines.push_back({m.at("x").get<double>(), m.at("y").get<double>()});
    const int n = net.machine_count() + 1;
    const auto& gains = j.at("gains");
    if (static_cast<long>(gains.size()) != static_cast<long>(n) * (n - 1) / 2)
      throw std::invalid_argument("network_from_json: gain count mismatch");
    net.gains = GainMatrix(n);
    std::size_t k = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) net.gains.set(a, b, gains.at(k++).get<double>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("network_from_json: ") + e.what());
  }
  return net;
}

}  // namespace relaysel
