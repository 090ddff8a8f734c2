#pragma once

#include <cstdint>
#include <random>

namespace relaysel {

// Independent random streams derived from one run seed.
enum class Stream : std::uint32_t {
  kPlacement = 1,
  kShadowing = 2,
  kFading = 3,
  kArrivalOrder = 4,
  kRandomSelection = 5,
};

inline std::mt19937_64 make_stream(std::uint64_t seed, Stream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

}  // namespace relaysel
