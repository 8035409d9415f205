// Copyright 2026 The BSPE Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BSPE_BENCHMARK_HPP
#define BSPE_BENCHMARK_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bspe/core.hpp"

namespace bspe {

/// Which maximizer of j * v_j to report when several tie.
enum class WinnerCountTieBreak { smallest, largest };

/// Envy-free optimum in a k-unit environment: the top `winner_count` agents
/// each pay `uniform_price`. Zero revenue is reported with no winners.
struct EfoSolution {
  std::size_t winner_count = 0;
  Money uniform_price;
  Money revenue;
  std::vector<AgentId> winners;
};

namespace detail {

struct EfoIndex {
  std::size_t count = 0;
  Money price;
  Money revenue;
};

// `value_at` must be non-increasing in its index.
template <typename ValueAt>
EfoIndex efo_scan(std::size_t n, std::size_t units, ValueAt value_at, WinnerCountTieBreak tie) {
  EfoIndex best;
  const std::size_t limit = std::min(units, n);
  for (std::size_t j = 1; j <= limit; ++j) {
    const Money price = value_at(j - 1);
    const Money revenue = j * price;
    const bool better = tie == WinnerCountTieBreak::smallest ? revenue > best.revenue : revenue >= best.revenue;
    if (better && revenue > Money{}) best = {j, price, revenue};
  }
  return best;
}

}  // namespace detail

inline EfoSolution efo(const ValuationProfile& profile, const Environment& env,
                       WinnerCountTieBreak tie = WinnerCountTieBreak::smallest) {
  const auto sorted = profile.sorted();
  const auto best =
      detail::efo_scan(sorted.size(), env.units(), [&](std::size_t i) { return sorted[i].value; }, tie);
  EfoSolution out{best.count, best.price, best.revenue, {}};
  for (std::size_t i = 0; i < best.count; ++i) out.winners.push_back(sorted[i].id);
  return out;
}

/// Revenue share of `subset` in the envy-free optimum of the whole profile.
inline Money efo_contribution(const ValuationProfile& profile, const Environment& env,
                              std::span<const AgentId> subset) {
  const auto solution = efo(profile, env);
  Money total;
  for (AgentId id : subset) {
    if (!profile.contains(id)) throw std::invalid_argument("efo_contribution: unknown agent " + std::to_string(id));
    if (std::find(solution.winners.begin(), solution.winners.end(), id) != solution.winners.end())
      total += solution.uniform_price;
  }
  return total;
}

inline constexpr std::size_t kBruteforceMaxAgents = 12;

/// Reference optimum by enumerating every winner set and every candidate
/// price, keeping only envy-free (set, price) pairs.
inline Money efo_bruteforce(const ValuationProfile& profile, const Environment& env) {
  const auto entries = profile.entries();
  const std::size_t n = entries.size();
  if (n > kBruteforceMaxAgents)
    throw std::invalid_argument("efo_bruteforce: " + std::to_string(n) + " agents exceeds limit");
  Money best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto winners = static_cast<std::size_t>(__builtin_popcount(mask));
    if (winners > env.units()) continue;
    for (const auto& candidate : entries) {
      const Money price = candidate.value;
      bool envy_free = true;
      for (std::size_t i = 0; i < n && envy_free; ++i) {
        const bool wins = (mask >> i) & 1u;
        envy_free = wins ? entries[i].value >= price : entries[i].value <= price;
      }
      if (envy_free) best = std::max(best, winners * price);
    }
  }
  return best;
}

}  // namespace bspe

#endif  // BSPE_BENCHMARK_HPP
