#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "relaysel/topology.hpp"

namespace relaysel {

enum class Hop { kUnmatched, kDirect, kRelay };

struct SourceOutcome {
  Hop hop = Hop::kUnmatched;
  int relay = -1;         // valid for Hop::kRelay
  double capacity = 0.0;  // realized path capacity, bit/s
};

// Per-source result shared by every selector. Each relay serves at most one
// source and every direct source and every used relay holds one BS slot.
struct Matching {
  std::vector<SourceOutcome> outcomes;
  int bs_slots_used = 0;

  int matched_count() const;
  int unmatched_count() const;

  // Builders used by the selectors. A zero-capacity option is recorded as
  // unmatched.
  static Matching empty(int n_sources);
  void assign_direct(int i, const CapacityTables& t);
  void assign_relay(int i, int j, const CapacityTables& t);
};

// Sum of realized capacities over matched sources.
double objective(const Matching& matching);

enum class Algorithm { kWrsa, kRrsa, kOrsa, kMrsa };

std::string_view to_string(Algorithm a);
// Accepts lower- or upper-case names; throws std::invalid_argument otherwise.
Algorithm parse_algorithm(std::string_view name);

// How ORSA charges the base-station quota.
//  kJoint: one slot per direct source and per used relay (k = min(N_s, Q_BS)).
//  kDirectOnly: only direct sources consume the Q_BS channel columns;
//    relay columns are unbudgeted (k = min(N_s, N_r + Q_BS)).
enum class QuotaMode { kJoint, kDirectOnly };

Matching orsa(const CapacityTables& tables, int q_bs, QuotaMode mode = QuotaMode::kJoint);

struct MrsaStats {
  long proposals = 0;
};

Matching mrsa(const CapacityTables& tables, int q_bs, MrsaStats* stats = nullptr);

// Sources in `order` take a free BS slot if their direct link exists.
Matching wrsa(const CapacityTables& tables, int q_bs, const std::vector<int>& order);

Matching rrsa(const CapacityTables& tables, int q_bs, std::mt19937_64& rng);

}  // namespace relaysel
