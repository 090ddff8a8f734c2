#include "relaysel/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace relaysel {
namespace {

constexpr double kSpeedOfLight = 299792458.0;

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string("RadioParams: ") + name + " must be > 0");
}

}  // namespace

double RadioParams::rx_power_threshold_w() const {
  return std::pow(10.0, rx_power_threshold_db / 10.0);
}

void RadioParams::validate() const {
  require_positive(wifi_total_bandwidth_hz, "wifi_total_bandwidth_hz");
  require_positive(lte_total_bandwidth_hz, "lte_total_bandwidth_hz");
  require_positive(p_wifi_machine_w, "p_wifi_machine_w");
  require_positive(p_wifi_bs_w, "p_wifi_bs_w");
  require_positive(p_lte_machine_w, "p_lte_machine_w");
  require_positive(p_lte_bs_w, "p_lte_bs_w");
  require_positive(noise_density_w_per_hz, "noise_density_w_per_hz");
  if (noise_power_w) require_positive(*noise_power_w, "noise_power_w");
  require_positive(wifi_freq_hz, "wifi_freq_hz");
  require_positive(lte_freq_hz, "lte_freq_hz");
  require_positive(machine_height_m, "machine_height_m");
  require_positive(bs_height_m, "bs_height_m");
  if (wifi_channel_count < 1) throw std::invalid_argument("RadioParams: wifi_channel_count must be >= 1");
  if (lte_channel_count < 1) throw std::invalid_argument("RadioParams: lte_channel_count must be >= 1");
  if (shadow_std_db < 0.0) throw std::invalid_argument("RadioParams: shadow_std_db must be >= 0");
  if (!(fading_factor > 0.0 && fading_factor <= 1.0))
    throw std::invalid_argument("RadioParams: fading_factor must lie in (0, 1]");
  if (!(fading_probability >= 0.0 && fading_probability <= 1.0))
    throw std::invalid_argument("RadioParams: fading_probability must lie in [0, 1]");
}

double crossover_distance(double freq_hz, double tx_height_m, double rx_height_m) {
  const double lambda = kSpeedOfLight / freq_hz;
  return 4.0 * std::numbers::pi * tx_height_m * rx_height_m / lambda;
}

LinkGain path_gain(double distance_m, double freq_hz, double tx_height_m,
                   double rx_height_m, double shadow_db) {
  if (!(distance_m > 0.0)) throw std::domain_error("path_gain: distance must be positive");
  const double lambda = kSpeedOfLight / freq_hz;
  double g;
  if (distance_m < crossover_distance(freq_hz, tx_height_m, rx_height_m)) {
    const double r = lambda / (4.0 * std::numbers::pi * distance_m);
    g = r * r;
  } else {
    const double hh = tx_height_m * rx_height_m;
    const double d2 = distance_m * distance_m;
    g = (hh * hh) / (d2 * d2);
  }
  return {g * std::pow(10.0, shadow_db / 10.0), distance_m};
}

double sinr_wifi(int tx, int rx, std::span<const int> active_sources,
                 const GainMatrix& gains, const RadioParams& params) {
  double interference = 0.0;
  for (int k : active_sources) {
    if (k == tx || k == rx) continue;
    interference += params.p_wifi_machine_w * gains.gain(k, rx);
  }
  return params.p_wifi_machine_w * gains.gain(tx, rx) / (params.wifi_noise_w() + interference);
}

double sinr_lte(int tx, int rx, const GainMatrix& gains, const RadioParams& params) {
  return params.p_lte_machine_w * gains.gain(tx, rx) / params.lte_noise_w();
}

double capacity(double bandwidth_hz, double sinr) {
  if (!(bandwidth_hz > 0.0)) throw std::domain_error("capacity: bandwidth must be positive");
  if (!(sinr >= 0.0)) throw std::domain_error("capacity: SINR must be non-negative");
  return bandwidth_hz * std::log2(1.0 + sinr);
}

double apply_fading(double c_source_bs, double alpha, bool faded) {
  return faded ? alpha * c_source_bs : c_source_bs;
}

}  // namespace relaysel
