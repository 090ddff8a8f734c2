#pragma once

#include <functional>
#include <string>
#include <vector>

#include "relaysel/algorithms.hpp"
#include "relaysel/assignment.hpp"

// Exhaustive references for verifying the selectors on small instances.
// Everything here is exponential in the instance size.
namespace relaysel::oracle {

inline constexpr int kMaxSources = 6;
inline constexpr int kMaxRelays = 5;
inline constexpr int kMaxKCardSide = 6;

// Calls `visit` for every matching in which each source is unmatched, direct
// (c' > 0) or served by a distinct relay with a positive two-hop value, and
// direct sources plus used relays number at most q_bs.
void for_each_feasible_matching(const CapacityTables& tables, int q_bs,
                                const std::function<void(const Matching&)>& visit);

// Max-objective feasible matching. Throws std::invalid_argument past
// kMaxSources / kMaxRelays.
Matching brute_force_relay_selection(const CapacityTables& tables, int q_bs);

// Max total weight over all matchings with exactly k edges.
double brute_force_kcard(const KCardInstance& instance);

// Empty string if `matching` is feasible, otherwise the first violation.
std::string feasibility_violation(const Matching& matching, const CapacityTables& tables, int q_bs);

inline constexpr int kBaseStation = -1;

struct BlockingPair {
  int source = 0;
  int acceptor = kBaseStation;  // relay index, or kBaseStation

  bool operator==(const BlockingPair&) const = default;
};

// Source/acceptor pairs that would both rather be matched to each other.
// Sources rank hops by path capacity (ties: lower relay index first, the BS
// after every relay). A relay ranks sources by two-hop path value (ties:
// lower index). The BS ranks applicants by the capacity of the link into it
// (c' for a source, c'' for a relay; ties: sources first, then lower index).
// An idle relay can only take a source if the BS would also admit the relay.
std::vector<BlockingPair> find_blocking_pairs(const Matching& matching, const CapacityTables& tables,
                                              int q_bs);

std::vector<Matching> enumerate_stable_matchings(const CapacityTables& tables, int q_bs);

}  // namespace relaysel::oracle
