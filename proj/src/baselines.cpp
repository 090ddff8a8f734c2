#include <stdexcept>

#include "relaysel/algorithms.hpp"

namespace relaysel {

Matching wrsa(const CapacityTables& tables, int q_bs, const std::vector<int>& order) {
  tables.validate();
  if (q_bs < 0) throw std::invalid_argument("wrsa: negative BS quota");
  const int ns = tables.n_sources();
  if (static_cast<int>(order.size()) != ns) throw std::invalid_argument("wrsa: order must list every source");
  std::vector<bool> seen(ns, false);
  Matching out = Matching::empty(ns);
  for (int i : order) {
    if (i < 0 || i >= ns || seen[i]) throw std::invalid_argument("wrsa: order is not a permutation");
    seen[i] = true;
    if (out.bs_slots_used < q_bs) out.assign_direct(i, tables);
  }
  return out;
}

// One shot per source: a fair coin picks the BS or a uniformly drawn relay,
// and a failed attempt is never retried.
Matching rrsa(const CapacityTables& tables, int q_bs, std::mt19937_64& rng) {
  tables.validate();
  if (q_bs < 0) throw std::invalid_argument("rrsa: negative BS quota");
  const int ns = tables.n_sources();
  const int nr = tables.n_relays();
  std::bernoulli_distribution pick_relay(0.5);
  std::vector<bool> claimed(nr, false);
  Matching out = Matching::empty(ns);
  for (int i = 0; i < ns; ++i) {
    if (!pick_relay(rng)) {
      if (out.bs_slots_used < q_bs) out.assign_direct(i, tables);
      continue;
    }
    if (nr == 0) continue;
    const int j = std::uniform_int_distribution<int>(0, nr - 1)(rng);
    if (claimed[j] || out.bs_slots_used >= q_bs) continue;
    claimed[j] = true;
    out.assign_relay(i, j, tables);
  }
  return out;
}

}  // namespace relaysel
