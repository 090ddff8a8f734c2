#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "relaysel/channel.hpp"

namespace relaysel {
namespace {

TEST(PathGain, FreeSpaceBelowCrossover) {
  const double lambda = 299792458.0 / 2.4e9;
  const double d = 50.0;
  const double expect = std::pow(lambda / (4.0 * M_PI * d), 2);
  EXPECT_DOUBLE_EQ(path_gain(d, 2.4e9, 1.5, 1.5, 0.0).gain, expect);
}

// Values worked out by hand: lambda = 0.124913524 m, crossover 226.351 m.
TEST(PathGain, HandCalculatedAt2400MHz) {
  EXPECT_NEAR(crossover_distance(2.4e9, 1.5, 1.5), 226.35126237078163, 1e-9);
  const LinkGain g = path_gain(100.0, 2.4e9, 1.5, 1.5, 0.0);
  EXPECT_NEAR(g.gain, 9.88096121031849e-09, 1e-20);
  EXPECT_DOUBLE_EQ(g.distance_m, 100.0);
  EXPECT_NEAR(path_gain(300.0, 2.4e9, 1.5, 1.5, 0.0).gain, 6.25e-10, 1e-22);
}

TEST(PathGain, ContinuousAtCrossover) {
  for (double f : {0.9e9, 2.0e9, 2.4e9, 5.8e9}) {
    for (double hr : {1.5, 10.0, 30.0}) {
      const double dc = crossover_distance(f, 1.5, hr);
      const double lambda = 299792458.0 / f;
      const double free_space = std::pow(lambda / (4.0 * M_PI * dc), 2);
      const double two_ray = path_gain(dc, f, 1.5, hr, 0.0).gain;
      EXPECT_NEAR(two_ray / free_space, 1.0, 1e-9);
    }
  }
}

TEST(PathGain, ShadowingScales) {
  const double base = path_gain(80.0, 2.4e9, 1.5, 1.5, 0.0).gain;
  EXPECT_NEAR(path_gain(80.0, 2.4e9, 1.5, 1.5, 10.0).gain, 10.0 * base, 1e-12 * base);
  EXPECT_NEAR(path_gain(80.0, 2.4e9, 1.5, 1.5, -3.0).gain, base * std::pow(10.0, -0.3), 1e-12 * base);
}

TEST(PathGain, RejectsNonPositiveDistance) {
  EXPECT_THROW(path_gain(0.0, 2.4e9, 1.5, 1.5, 0.0), std::domain_error);
  EXPECT_THROW(path_gain(-1.0, 2.4e9, 1.5, 1.5, 0.0), std::domain_error);
}

TEST(Capacity, Examples) {
  EXPECT_DOUBLE_EQ(capacity(20e6, 1.0), 20e6);
  EXPECT_DOUBLE_EQ(capacity(20e6, 3.0), 40e6);
  EXPECT_DOUBLE_EQ(capacity(20e6, 0.0), 0.0);
  EXPECT_THROW(capacity(20e6, -0.1), std::domain_error);
  EXPECT_THROW(capacity(0.0, 1.0), std::domain_error);
}

TEST(Capacity, MonotoneAndLinear) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> s(0.0, 1e4), b(1e3, 1e8);
  for (int t = 0; t < 1000; ++t) {
    const double lo = s(rng), hi = lo + s(rng), bw = b(rng);
    EXPECT_LE(capacity(bw, lo), capacity(bw, hi));
    EXPECT_NEAR(capacity(3.0 * bw, lo), 3.0 * capacity(bw, lo), 1e-9 * capacity(3.0 * bw, lo) + 1e-12);
  }
}

TEST(TwoHop, Min) {
  EXPECT_EQ(two_hop_capacity(10, 7), 7);
  EXPECT_EQ(two_hop_capacity(0, 5), 0);
  EXPECT_EQ(two_hop_capacity(5, 5), 5);
}

TEST(Fading, Examples) {
  EXPECT_EQ(apply_fading(1e6, 1e-4, false), 1e6);
  EXPECT_EQ(apply_fading(1e6, 1.0, true), 1e6);
  EXPECT_NEAR(apply_fading(1e6, 1e-4, true), 100.0, 1e-9);
}

RadioParams fixed_noise(double n) {
  RadioParams p;
  p.noise_power_w = n;
  return p;
}

TEST(Sinr, LteDirectRatio) {
  GainMatrix g(2);
  const RadioParams p = fixed_noise(1e-13);
  g.set(0, 1, 1e-13);
  EXPECT_NEAR(sinr_lte(0, 1, g, p), 0.2, 1e-15);
  g.set(0, 1, 0.0);
  EXPECT_EQ(sinr_lte(0, 1, g, p), 0.0);
  g.set(0, 1, 1e-10);
  EXPECT_NEAR(sinr_lte(0, 1, g, fixed_noise(8e-14)), 250.0, 1e-9);
}

TEST(Sinr, WifiSingleSourceHasNoInterference) {
  GainMatrix g(2);
  g.set(0, 1, 1e-9);
  const std::vector<int> active{0};
  EXPECT_DOUBLE_EQ(sinr_wifi(0, 1, active, g, fixed_noise(1e-12)), 0.1 * 1e-9 / 1e-12);
}

TEST(Sinr, WifiSymmetricPairTendsToOne) {
  GainMatrix g(3);
  g.set(0, 2, 1e-8);
  g.set(1, 2, 1e-8);
  const std::vector<int> active{0, 1};
  EXPECT_NEAR(sinr_wifi(0, 2, active, g, fixed_noise(1e-30)), 1.0, 1e-12);
}

TEST(Sinr, WifiThreeSourcesHandValue) {
  // tx 0 -> rx 3 with sources 1 and 2 interfering.
  GainMatrix g(4);
  g.set(0, 3, 1e-9);
  g.set(1, 3, 2e-10);
  g.set(2, 3, 5e-11);
  const std::vector<int> active{0, 1, 2};
  EXPECT_NEAR(sinr_wifi(0, 3, active, g, fixed_noise(1e-12)), 3.8461538461538467, 1e-12);
}

TEST(Sinr, WifiNonIncreasingInInterferers) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> gd(1e-12, 1e-7);
  const RadioParams p;
  for (int t = 0; t < 200; ++t) {
    GainMatrix g(8);
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b) g.set(a, b, gd(rng));
    std::vector<int> active{0};
    double prev = sinr_wifi(0, 7, active, g, p);
    for (int k = 1; k < 7; ++k) {
      active.push_back(k);
      const double cur = sinr_wifi(0, 7, active, g, p);
      EXPECT_LE(cur, prev);
      prev = cur;
    }
  }
}

TEST(Sinr, LteDominatesWifiAtEqualPower) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> gd(1e-12, 1e-7);
  RadioParams p = fixed_noise(1e-13);
  p.p_lte_machine_w = p.p_wifi_machine_w;
  for (int t = 0; t < 200; ++t) {
    GainMatrix g(4);
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) g.set(a, b, gd(rng));
    const std::vector<int> active{0, 1, 2};
    EXPECT_GE(sinr_lte(0, 3, g, p), sinr_wifi(0, 3, active, g, p));
  }
}

TEST(RadioParams, Defaults) {
  const RadioParams p;
  EXPECT_NO_THROW(p.validate());
  EXPECT_DOUBLE_EQ(p.lte_bandwidth_hz(), 200e3);
  EXPECT_DOUBLE_EQ(p.wifi_bandwidth_hz(), 20e6);
  EXPECT_NEAR(p.rx_power_threshold_w(), 7.943282347242789e-13, 1e-25);
  EXPECT_NEAR(p.wifi_noise_w(), 8.0077642e-14, 1e-20);
  EXPECT_NEAR(p.lte_noise_w(), 8.0077642e-16, 1e-22);
  EXPECT_DOUBLE_EQ(fixed_noise(3e-14).lte_noise_w(), 3e-14);
}

TEST(RadioParams, ValidateRejects) {
  RadioParams p;
  p.fading_factor = 0.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = RadioParams{};
  p.fading_probability = 1.5;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = RadioParams{};
  p.lte_channel_count = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = RadioParams{};
  p.p_lte_machine_w = 0.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace relaysel
