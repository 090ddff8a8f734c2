#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

#include "relaysel/algorithms.hpp"

namespace relaysel {

int Matching::matched_count() const {
  return static_cast<int>(std::count_if(outcomes.begin(), outcomes.end(),
                                        [](const SourceOutcome& o) { return o.hop != Hop::kUnmatched; }));
}

int Matching::unmatched_count() const { return static_cast<int>(outcomes.size()) - matched_count(); }

Matching Matching::empty(int n_sources) {
  Matching m;
  m.outcomes.assign(n_sources, SourceOutcome{});
  return m;
}

void Matching::assign_direct(int i, const CapacityTables& t) {
  const double c = t.source_bs[i];
  if (c <= 0.0) return;
  outcomes[i] = {Hop::kDirect, -1, c};
  ++bs_slots_used;
}

void Matching::assign_relay(int i, int j, const CapacityTables& t) {
  const double c = t.path_via(i, j);
  if (c <= 0.0) return;
  outcomes[i] = {Hop::kRelay, j, c};
  ++bs_slots_used;
}

double objective(const Matching& matching) {
  double total = 0.0;
  for (const auto& o : matching.outcomes)
    if (o.hop != Hop::kUnmatched) total += o.capacity;
  return total;
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kWrsa: return "WRSA";
    case Algorithm::kRrsa: return "RRSA";
    case Algorithm::kOrsa: return "ORSA";
    case Algorithm::kMrsa: return "MRSA";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "wrsa") return Algorithm::kWrsa;
  if (lower == "rrsa") return Algorithm::kRrsa;
  if (lower == "orsa") return Algorithm::kOrsa;
  if (lower == "mrsa") return Algorithm::kMrsa;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

}  // namespace relaysel
