#pragma once

#include <random>

#include "relaysel/topology.hpp"

namespace relaysel::testing {

// Random capacity tables. With probability `zero_p` an entry is 0 (link
// below threshold). Integer-valued when `integral` so ties actually occur.
inline CapacityTables random_tables(std::mt19937_64& rng, int ns, int nr, double zero_p = 0.1,
                                    bool integral = false) {
  std::uniform_real_distribution<double> u(1.0, 100.0);
  std::uniform_int_distribution<int> ui(1, 20);
  std::bernoulli_distribution zero(zero_p);
  auto draw = [&] { return zero(rng) ? 0.0 : integral ? static_cast<double>(ui(rng)) : u(rng); };
  CapacityTables t;
  t.source_relay = Matrix(ns, nr);
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < nr; ++j) t.source_relay(i, j) = draw();
  for (int i = 0; i < ns; ++i) t.source_bs.push_back(draw());
  for (int j = 0; j < nr; ++j) t.relay_bs.push_back(draw());
  t.faded.assign(ns, false);
  return t;
}

}  // namespace relaysel::testing
