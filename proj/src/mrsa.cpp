#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>

#include "relaysel/algorithms.hpp"

namespace relaysel {
namespace {

// Deferred acceptance over sources, relays and the base station.
//
// Sources rank next hops (relays and the BS) by the capacity of the path
// through that hop. A relay holds one source, preferring the higher
// two-hop path value. The BS holds up to Q applicants (direct sources and
// relays) ranked by the capacity of the link arriving at it: c'[i] for a
// source, c''[j] for a relay. A relay applies to the BS when it first
// receives a source. A relay the BS turns down drops its source and refuses
// all further proposals.
class DeferredAcceptance {
 public:
  DeferredAcceptance(const CapacityTables& t, int q_bs) : t_(t), q_bs_(q_bs) {
    ns_ = t.n_sources();
    nr_ = t.n_relays();
    bs_ = nr_;
    build_preferences();
    holder_.assign(nr_, -1);
    relay_state_.assign(nr_, RelayState::kIdle);
    at_bs_direct_.assign(ns_, false);
  }

  Matching run(MrsaStats* stats) {
    std::deque<Proposer> queue;
    for (int i = 0; i < ns_; ++i) queue.push_back({false, i});

    while (!queue.empty()) {
      const Proposer p = queue.front();
      queue.pop_front();
      if (p.is_relay) {
        relay_apply(p.id, queue);
      } else {
        source_propose(p.id, queue);
      }
    }

    // Every surviving holding becomes a match.
    Matching out = Matching::empty(ns_);
    for (int i = 0; i < ns_; ++i)
      if (at_bs_direct_[i]) out.assign_direct(i, t_);
    for (int j = 0; j < nr_; ++j) {
      if (relay_state_[j] != RelayState::kAtBs) continue;
      if (holder_[j] < 0) throw std::logic_error("mrsa: admitted relay without a source");
      out.assign_relay(holder_[j], j, t_);
    }
    if (stats) stats->proposals = proposals_;
    return out;
  }

 private:
  struct Proposer {
    bool is_relay;
    int id;
  };
  enum class RelayState { kIdle, kPending, kAtBs, kDead };
  struct Applicant {
    bool is_relay;
    int id;
    double value;
  };

  // Heap order for source i: higher path value first, then lower index (the
  // BS has index N_r, so it comes after every relay on ties).
  auto ranks_below(int i) const {
    return [this, i](int a, int b) {
      const double va = hop_value(i, a), vb = hop_value(i, b);
      if (va != vb) return va < vb;
      return a > b;
    };
  }

  // Each preference list is a max-heap.
  void build_preferences() {
    prefs_.resize(ns_);
    for (int i = 0; i < ns_; ++i) {
      auto& list = prefs_[i];
      for (int j = 0; j < nr_; ++j)
        if (t_.path_via(i, j) > 0.0) list.push_back(j);
      if (t_.source_bs[i] > 0.0) list.push_back(bs_);
      std::make_heap(list.begin(), list.end(), ranks_below(i));
    }
  }

  double hop_value(int i, int acceptor) const {
    return acceptor == bs_ ? t_.source_bs[i] : t_.path_via(i, acceptor);
  }

  static bool bs_prefers(const Applicant& a, const Applicant& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.is_relay != b.is_relay) return !a.is_relay;
    return a.id < b.id;
  }

  bool relay_prefers(int j, int a, int b) const {
    const double ca = t_.path_via(a, j);
    const double cb = t_.path_via(b, j);
    if (ca != cb) return ca > cb;
    return a < b;
  }

  void reject_source(int i, std::deque<Proposer>& queue, bool front) {
    auto& list = prefs_[i];
    std::pop_heap(list.begin(), list.end(), ranks_below(i));
    list.pop_back();
    if (front) {
      queue.push_front({false, i});
    } else {
      queue.push_back({false, i});
    }
  }

  void source_propose(int i, std::deque<Proposer>& queue) {
    if (prefs_[i].empty()) return;  // list exhausted: unmatched
    const int target = prefs_[i].front();
    ++proposals_;
    if (target == bs_) {
      const auto bumped = bs_offer({false, i, t_.source_bs[i]});
      if (!bumped) {
        reject_source(i, queue, true);
        return;
      }
      at_bs_direct_[i] = true;
      if (bumped->id >= 0) evict(*bumped, queue);
      return;
    }

    const int j = target;
    if (relay_state_[j] == RelayState::kDead) {
      reject_source(i, queue, true);
      return;
    }
    const int current = holder_[j];
    if (current < 0) {
      holder_[j] = i;
      if (relay_state_[j] == RelayState::kIdle) {
        relay_state_[j] = RelayState::kPending;
        queue.push_back({true, j});
      }
    } else if (relay_prefers(j, i, current)) {
      holder_[j] = i;
      reject_source(current, queue, false);
    } else {
      reject_source(i, queue, true);
    }
  }

  void relay_apply(int j, std::deque<Proposer>& queue) {
    if (t_.relay_bs[j] <= 0.0) {
      kill_relay(j, queue);
      return;
    }
    ++proposals_;
    const auto bumped = bs_offer({true, j, t_.relay_bs[j]});
    if (!bumped) {
      kill_relay(j, queue);
      return;
    }
    relay_state_[j] = RelayState::kAtBs;
    if (bumped->id >= 0) evict(*bumped, queue);
  }

  void kill_relay(int j, std::deque<Proposer>& queue) {
    relay_state_[j] = RelayState::kDead;
    if (holder_[j] >= 0) {
      const int i = holder_[j];
      holder_[j] = -1;
      reject_source(i, queue, false);
    }
  }

  // Returns nullopt if the BS declines; otherwise the displaced applicant
  // (id -1 when a free slot was used).
  std::optional<Applicant> bs_offer(const Applicant& a) {
    if (static_cast<int>(bs_held_.size()) < q_bs_) {
      bs_held_.push_back(a);
      return Applicant{false, -1, 0.0};
    }
    if (bs_held_.empty()) return std::nullopt;
    auto worst = bs_held_.begin();
    for (auto it = bs_held_.begin() + 1; it != bs_held_.end(); ++it)
      if (bs_prefers(*worst, *it)) worst = it;
    if (!bs_prefers(a, *worst)) return std::nullopt;
    const Applicant out = *worst;
    *worst = a;
    return out;
  }

  void evict(const Applicant& a, std::deque<Proposer>& queue) {
    if (a.is_relay) {
      kill_relay(a.id, queue);
    } else {
      at_bs_direct_[a.id] = false;
      reject_source(a.id, queue, false);
    }
  }

  const CapacityTables& t_;
  int q_bs_;
  int ns_ = 0;
  int nr_ = 0;
  int bs_ = 0;
  std::vector<std::vector<int>> prefs_;
  std::vector<int> holder_;
  std::vector<RelayState> relay_state_;
  std::vector<bool> at_bs_direct_;
  std::vector<Applicant> bs_held_;
  long proposals_ = 0;
};

}  // namespace

Matching mrsa(const CapacityTables& tables, int q_bs, MrsaStats* stats) {
  tables.validate();
  if (q_bs < 0) throw std::invalid_argument("mrsa: negative BS quota");
  return DeferredAcceptance(tables, q_bs).run(stats);
}

}  // namespace relaysel
