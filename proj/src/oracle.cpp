#include "relaysel/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace relaysel::oracle {
namespace {

void require_small(const CapacityTables& t) {
  if (t.n_sources() > kMaxSources || t.n_relays() > kMaxRelays)
    throw std::invalid_argument("oracle: instance too large for exhaustive search");
}

void enumerate(const CapacityTables& t, int q_bs, int i, std::vector<bool>& used, Matching& cur,
               const std::function<void(const Matching&)>& visit) {
  if (i == t.n_sources()) {
    visit(cur);
    return;
  }
  enumerate(t, q_bs, i + 1, used, cur, visit);
  if (cur.bs_slots_used >= q_bs) return;

  const SourceOutcome keep = cur.outcomes[i];
  if (t.source_bs[i] > 0.0) {
    cur.outcomes[i] = {Hop::kDirect, -1, t.source_bs[i]};
    ++cur.bs_slots_used;
    enumerate(t, q_bs, i + 1, used, cur, visit);
    --cur.bs_slots_used;
    cur.outcomes[i] = keep;
  }
  for (int j = 0; j < t.n_relays(); ++j) {
    const double v = std::min(t.source_relay(i, j), t.relay_bs[j]);
    if (used[j] || v <= 0.0) continue;
    used[j] = true;
    cur.outcomes[i] = {Hop::kRelay, j, v};
    ++cur.bs_slots_used;
    enumerate(t, q_bs, i + 1, used, cur, visit);
    --cur.bs_slots_used;
    cur.outcomes[i] = keep;
    used[j] = false;
  }
}

double total(const Matching& m) {
  double s = 0.0;
  for (const auto& o : m.outcomes) s += o.capacity;
  return s;
}

// Rank keys. Larger is better; ties fall through to the id comparisons.
double source_value(const CapacityTables& t, int i, int acceptor) {
  return acceptor == kBaseStation ? t.source_bs[i] : std::min(t.source_relay(i, acceptor), t.relay_bs[acceptor]);
}

// True if source i ranks `a` strictly above `b` (kBaseStation after relays on ties).
bool source_prefers(const CapacityTables& t, int i, int a, int b) {
  const double va = source_value(t, i, a);
  const double vb = source_value(t, i, b);
  if (va != vb) return va > vb;
  const int ra = a == kBaseStation ? t.n_relays() : a;
  const int rb = b == kBaseStation ? t.n_relays() : b;
  return ra < rb;
}

struct BsEntry {
  bool relay;
  int id;
  double value;
};

bool bs_ranks_above(const BsEntry& a, const BsEntry& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.relay != b.relay) return !a.relay;
  return a.id < b.id;
}

}  // namespace

void for_each_feasible_matching(const CapacityTables& tables, int q_bs,
                                const std::function<void(const Matching&)>& visit) {
  require_small(tables);
  std::vector<bool> used(tables.n_relays(), false);
  Matching cur = Matching::empty(tables.n_sources());
  enumerate(tables, q_bs, 0, used, cur, visit);
}

Matching brute_force_relay_selection(const CapacityTables& tables, int q_bs) {
  Matching best = Matching::empty(tables.n_sources());
  double best_value = 0.0;
  for_each_feasible_matching(tables, q_bs, [&](const Matching& m) {
    const double v = total(m);
    if (v > best_value) {
      best_value = v;
      best = m;
    }
  });
  return best;
}

double brute_force_kcard(const KCardInstance& instance) {
  const int n = instance.n();
  const int m = instance.m();
  if (n > kMaxKCardSide || m > kMaxKCardSide) throw std::invalid_argument("oracle: k-cardinality instance too large");
  if (instance.k < 0 || instance.k > std::min(n, m)) throw std::invalid_argument("oracle: invalid k");

  double best = -1.0;
  std::vector<bool> col_used(m, false);
  std::function<void(int, int, double)> rec = [&](int row, int picked, double sum) {
    if (picked == instance.k) {
      best = std::max(best, sum);
      return;
    }
    if (n - row < instance.k - picked) return;
    rec(row + 1, picked, sum);
    for (int c = 0; c < m; ++c) {
      if (col_used[c]) continue;
      col_used[c] = true;
      rec(row + 1, picked + 1, sum + instance.weights(row, c));
      col_used[c] = false;
    }
  };
  rec(0, 0, 0.0);
  return best;
}

std::string feasibility_violation(const Matching& matching, const CapacityTables& t, int q_bs) {
  if (static_cast<int>(matching.outcomes.size()) != t.n_sources()) return "outcome count differs from N_s";
  std::vector<int> relay_use(t.n_relays(), 0);
  int slots = 0;
  for (int i = 0; i < t.n_sources(); ++i) {
    const auto& o = matching.outcomes[i];
    switch (o.hop) {
      case Hop::kUnmatched:
        if (o.capacity != 0.0) return "unmatched source " + std::to_string(i) + " has capacity";
        break;
      case Hop::kDirect:
        ++slots;
        if (!(o.capacity > 0.0) || o.capacity != t.source_bs[i])
          return "direct source " + std::to_string(i) + " has wrong capacity";
        break;
      case Hop::kRelay:
        ++slots;
        if (o.relay < 0 || o.relay >= t.n_relays()) return "relay index out of range";
        if (++relay_use[o.relay] > 1) return "relay " + std::to_string(o.relay) + " serves two sources";
        if (!(o.capacity > 0.0) || o.capacity != std::min(t.source_relay(i, o.relay), t.relay_bs[o.relay]))
          return "relayed source " + std::to_string(i) + " has wrong capacity";
        break;
    }
  }
  if (slots != matching.bs_slots_used) return "bs_slots_used does not match outcomes";
  if (slots > q_bs) return "BS quota exceeded";
  return {};
}

std::vector<BlockingPair> find_blocking_pairs(const Matching& matching, const CapacityTables& t, int q_bs) {
  const int ns = t.n_sources();
  const int nr = t.n_relays();

  std::vector<int> relay_source(nr, -1);
  std::vector<BsEntry> held;
  for (int i = 0; i < ns; ++i) {
    const auto& o = matching.outcomes[i];
    if (o.hop == Hop::kDirect) held.push_back({false, i, t.source_bs[i]});
    if (o.hop == Hop::kRelay) {
      relay_source[o.relay] = i;
      held.push_back({true, o.relay, t.relay_bs[o.relay]});
    }
  }
  auto bs_admits = [&](const BsEntry& e) {
    if (static_cast<int>(held.size()) < q_bs) return true;
    if (held.empty()) return false;
    const auto worst = std::min_element(held.begin(), held.end(),
                                        [](const BsEntry& a, const BsEntry& b) { return bs_ranks_above(b, a); });
    return bs_ranks_above(e, *worst);
  };
  auto prefers_to_current = [&](int i, int a) {
    if (source_value(t, i, a) <= 0.0) return false;
    const auto& o = matching.outcomes[i];
    if (o.hop == Hop::kUnmatched) return true;
    const int current = o.hop == Hop::kDirect ? kBaseStation : o.relay;
    return source_prefers(t, i, a, current);
  };

  std::vector<BlockingPair> out;
  for (int i = 0; i < ns; ++i) {
    const auto& o = matching.outcomes[i];
    if (o.hop != Hop::kDirect && prefers_to_current(i, kBaseStation) &&
        bs_admits({false, i, t.source_bs[i]}))
      out.push_back({i, kBaseStation});

    for (int j = 0; j < nr; ++j) {
      if (o.hop == Hop::kRelay && o.relay == j) continue;
      if (!prefers_to_current(i, j)) continue;
      const int holder = relay_source[j];
      bool relay_accepts;
      if (holder >= 0) {
        const double ci = std::min(t.source_relay(i, j), t.relay_bs[j]);
        const double ch = std::min(t.source_relay(holder, j), t.relay_bs[j]);
        relay_accepts = ci != ch ? ci > ch : i < holder;
      } else {
        relay_accepts = bs_admits({true, j, t.relay_bs[j]});
      }
      if (relay_accepts) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<Matching> enumerate_stable_matchings(const CapacityTables& tables, int q_bs) {
  std::vector<Matching> out;
  for_each_feasible_matching(tables, q_bs, [&](const Matching& m) {
    if (find_blocking_pairs(m, tables, q_bs).empty()) out.push_back(m);
  });
  return out;
}

}  // namespace relaysel::oracle
