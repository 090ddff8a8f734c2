#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relaysel/channel.hpp"
#include "relaysel/matrix.hpp"

namespace relaysel {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point a, Point b);

struct TopologyConfig {
  int n_sources = 0;
  int n_relays = 0;
  double side_m = 590.0;
  std::optional<Point> bs_position;  // defaults to the cell centre
};

// One cell: machines 0..N_s-1 are sources, N_s..N-1 are relays, node N is
// the base station. Gains are indexed by these node ids.
struct Network {
  double side_m = 590.0;
  Point bs;
  std::vector<Point> machines;
  int n_sources = 0;
  int n_relays = 0;
  GainMatrix gains;

  int machine_count() const { return n_sources + n_relays; }
  int source_id(int i) const { return i; }
  int relay_id(int j) const { return n_sources + j; }
  int bs_id() const { return n_sources + n_relays; }
};

// Per-run link capacities (bit/s) consumed by every selection algorithm.
struct CapacityTables {
  Matrix source_relay;               // c[i][j], WiFi
  std::vector<double> source_bs;     // c'[i], LTE, after fading
  std::vector<double> relay_bs;      // c''[j], LTE
  std::vector<bool> faded;           // fading coin per source

  int n_sources() const { return static_cast<int>(source_bs.size()); }
  int n_relays() const { return static_cast<int>(relay_bs.size()); }

  // Two-hop value of source i through relay j.
  double path_via(int i, int j) const { return two_hop_capacity(source_relay(i, j), relay_bs[j]); }

  // Throws std::invalid_argument on shape mismatch or negative/non-finite entries.
  void validate() const;
};

// Closest separation used for gain evaluation; co-located nodes are treated
// as this far apart.
inline constexpr double kMinLinkDistance = 1.0;

Network generate(const TopologyConfig& config, const RadioParams& radio, std::uint64_t seed);

CapacityTables build_capacity_tables(const Network& net, const RadioParams& params, std::uint64_t seed);

std::string to_json(const Network& net);
Network network_from_json(std::string_view text);

}  // namespace relaysel
