#include <algorithm>
#include <stdexcept>

#include "relaysel/algorithms.hpp"
#include "relaysel/assignment.hpp"

namespace relaysel {

// Sources form the row side; the column side is every relay followed by one
// column per BS channel. A relay column carries the two-hop value, a channel
// column the direct capacity. Picking k edges of this bipartite graph is the
// relay selection problem with k BS connections.
Matching orsa(const CapacityTables& tables, int q_bs, QuotaMode mode) {
  tables.validate();
  if (q_bs < 0) throw std::invalid_argument("orsa: negative BS quota");
  const int ns = tables.n_sources();
  const int nr = tables.n_relays();

  // At most N_s channel columns can ever be used.
  const int channels = std::min(q_bs, ns);

  KCardInstance inst;
  inst.weights = Matrix(ns, nr + channels);
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nr; ++j) inst.weights(i, j) = tables.path_via(i, j);
    for (int c = 0; c < channels; ++c) inst.weights(i, nr + c) = tables.source_bs[i];
  }
  inst.k = mode == QuotaMode::kJoint ? std::min(ns, q_bs) : std::min(ns, nr + channels);

  const KCardSolution sol = solve_kcard(inst);

  Matching out = Matching::empty(ns);
  for (const auto& [i, col] : sol.edges) {
    if (col < nr) {
      out.assign_relay(i, col, tables);
    } else {
      out.assign_direct(i, tables);
    }
  }
  if (mode == QuotaMode::kJoint && out.bs_slots_used > q_bs)
    throw std::logic_error("orsa: joint BS quota exceeded");
  return out;
}

}  // namespace relaysel
