#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace relaysel {

// Radio configuration under the static RF-interface split: WiFi carries
// machine-to-machine hops, LTE carries machine-to-base-station hops.
struct RadioParams {
  double wifi_total_bandwidth_hz = 20e6;
  int wifi_channel_count = 1;
  double lte_total_bandwidth_hz = 20e6;
  int lte_channel_count = 100;  // base-station quota
  double p_wifi_machine_w = 0.1;
  double p_wifi_bs_w = 0.1;  // listed for completeness, never used on the uplink
  double p_lte_machine_w = 0.2;
  double p_lte_bs_w = 10.0;
  // Thermal noise density kT at 290 K. Each receiver sees it over its own
  // channel bandwidth unless noise_power_w pins a single value for all links.
  double noise_density_w_per_hz = 1.380649e-23 * 290.0;
  std::optional<double> noise_power_w;
  double rx_power_threshold_db = -121.0;
  double shadow_mean_db = 0.0;
  double shadow_std_db = 4.0;
  double fading_factor = 1e-4;
  double fading_probability = 0.5;

  double wifi_freq_hz = 2.4e9;
  double lte_freq_hz = 2.0e9;
  double machine_height_m = 1.5;
  double bs_height_m = 30.0;

  // WiFi channels are shared by every machine; each LTE channel gets an
  // equal split of the LTE band.
  double wifi_bandwidth_hz() const { return wifi_total_bandwidth_hz / wifi_channel_count; }
  double lte_bandwidth_hz() const { return lte_total_bandwidth_hz / lte_channel_count; }
  double rx_power_threshold_w() const;
  double wifi_noise_w() const { return noise_power_w.value_or(noise_density_w_per_hz * wifi_bandwidth_hz()); }
  double lte_noise_w() const { return noise_power_w.value_or(noise_density_w_per_hz * lte_bandwidth_hz()); }

  // Throws std::invalid_argument naming the first offending field.
  void validate() const;
};

struct LinkGain {
  double gain = 0.0;  // linear power gain
  double distance_m = 0.0;
};

// Free-space / two-ray breakpoint distance 4*pi*ht*hr/lambda.
double crossover_distance(double freq_hz, double tx_height_m, double rx_height_m);

// Free-space gain below the crossover distance, two-ray gain at or beyond it,
// times the log-normal shadowing factor 10^(shadow_db/10).
// Throws std::domain_error for a non-positive distance.
LinkGain path_gain(double distance_m, double freq_hz, double tx_height_m,
                   double rx_height_m, double shadow_db);

// Symmetric per-pair linear gains over node ids 0..size-1.
class GainMatrix {
 public:
  GainMatrix() = default;
  explicit GainMatrix(int size) : size_(size), gains_(static_cast<std::size_t>(size) * size, 0.0) {}

  int size() const { return size_; }
  double gain(int a, int b) const { return gains_[index(a, b)]; }
  void set(int a, int b, double g) {
    gains_[index(a, b)] = g;
    gains_[index(b, a)] = g;
  }

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * size_ + b; }

  int size_ = 0;
  std::vector<double> gains_;
};

// WiFi SINR at `rx` for a transmission from `tx`. Every other active source
// interferes (worst-case convention), whether or not it is transmitting.
double sinr_wifi(int tx, int rx, std::span<const int> active_sources,
                 const GainMatrix& gains, const RadioParams& params);

// LTE SINR; the LTE uplink is interference-free.
double sinr_lte(int tx, int rx, const GainMatrix& gains, const RadioParams& params);

// Shannon capacity in bit/s. Throws std::domain_error for sinr < 0 or a
// non-positive bandwidth.
double capacity(double bandwidth_hz, double sinr);

// Decode-and-forward two-hop capacity.
inline double two_hop_capacity(double c_sr, double c_rd) { return c_sr < c_rd ? c_sr : c_rd; }

// Scales a direct source-to-BS capacity by `alpha` when the fading coin hits.
double apply_fading(double c_source_bs, double alpha, bool faded);

}  // namespace relaysel
