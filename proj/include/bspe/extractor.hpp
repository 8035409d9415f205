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

#ifndef BSPE_EXTRACTOR_HPP
#define BSPE_EXTRACTOR_HPP

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bspe/benchmark.hpp"
#include "bspe/core.hpp"

namespace bspe {

/// Envy-free optimum of the target profile: the extractor must raise at
/// least `target_revenue` whenever the bids dominate the target.
struct ExtractionParams {
  ValuationProfile target;
  Money reserve;
  Money target_revenue;
  std::size_t winner_quota = 0;
};

inline ExtractionParams extraction_params(const ValuationProfile& target, const Environment& env,
                                          WinnerCountTieBreak tie = WinnerCountTieBreak::smallest) {
  const auto solution = efo(target, env, tie);
  return {target, solution.uniform_price, solution.revenue, solution.winner_count};
}

/// Dominance-gated k-unit Vickrey auction with reserve.
///
/// If the bids pointwise dominate the target (and the target is worth
/// anything), the up-to-k highest bidders at or above the reserve win; else
/// everybody is rejected. Winners pay their critical value: the least bid
/// that keeps them winning with all other bids held fixed. The allocation is
/// monotone in each bid, so this is truthful for a fixed target.
///
/// Bid spans passed to the member functions must be in `ranks_before` order.
class ProfitExtractor {
 public:
  ProfitExtractor(const ValuationProfile& target, const Environment& env,
                  WinnerCountTieBreak tie = WinnerCountTieBreak::smallest)
      : params_(extraction_params(target, env, tie)), target_(target.sorted_values()), units_(env.units()) {}

  [[nodiscard]] const ExtractionParams& params() const { return params_; }

  [[nodiscard]] bool accepts(std::span<const Bid> sorted_bids) const {
    if (params_.target_revenue == Money{}) return false;
    const std::size_t len = std::max(sorted_bids.size(), target_.size());
    for (std::size_t i = 0; i < len; ++i) {
      const Money bid = i < sorted_bids.size() ? sorted_bids[i].value : Money{};
      if (bid < target_at(i)) return false;
    }
    return true;
  }

  /// Ranks (indices into `sorted_bids`) of the served agents.
  [[nodiscard]] std::vector<std::size_t> winners(std::span<const Bid> sorted_bids) const {
    std::vector<std::size_t> out;
    if (!accepts(sorted_bids)) return out;
    for (std::size_t i = 0; i < sorted_bids.size() && out.size() < units_; ++i) {
      if (sorted_bids[i].value < params_.reserve) break;
      if (!sorted_bids[i].is_pad()) out.push_back(i);
    }
    return out;
  }

  /// Critical value of the agent at rank `index`, who must be a winner.
  [[nodiscard]] Money critical_value(std::span<const Bid> sorted_bids, std::size_t index) const {
    const Bid me = sorted_bids[index];
    const ThresholdProbe probe(*this, sorted_bids, index);
    if (!probe.wins(me.value))
      throw std::invalid_argument("critical_value: agent " + std::to_string(me.id) + " is not served");

    std::vector<Money::rep> candidates{0, params_.reserve.units(), me.value.units()};
    for (std::size_t i = 0; i < target_.size(); ++i) {
      candidates.push_back(target_[i].units());
      candidates.push_back(target_[i].units() + 1);
    }
    for (std::size_t i = 0; i < sorted_bids.size(); ++i) {
      if (i == index) continue;
      candidates.push_back(sorted_bids[i].value.units());
      candidates.push_back(sorted_bids[i].value.units() + 1);
    }
    std::erase_if(candidates, [&](Money::rep c) { return c > me.value.units(); });
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Winning is monotone in the bid, so the first winning candidate is the threshold.
    const auto it = std::partition_point(candidates.begin(), candidates.end(),
                                         [&](Money::rep c) { return !probe.wins(Money(c)); });
    const Money threshold(*it);
    if (threshold > Money{} && probe.wins(Money(threshold.units() - 1)))
      throw std::logic_error("critical_value: threshold is not tight");
    return threshold;
  }

 private:
  [[nodiscard]] Money target_at(std::size_t i) const { return i < target_.size() ? target_[i] : Money{}; }

  // Evaluates "would the agent at `index` win with bid b" in O(log L) after
  // O(L) setup, holding the other bids fixed.
  class ThresholdProbe {
   public:
    ThresholdProbe(const ProfitExtractor& pe, std::span<const Bid> sorted_bids, std::size_t index)
        : pe_(pe), id_(sorted_bids[index].id) {
      others_.reserve(sorted_bids.size());
      for (std::size_t i = 0; i < sorted_bids.size(); ++i)
        if (i != index) others_.push_back(sorted_bids[i]);
      len_ = std::max(sorted_bids.size(), pe.target_.size());
      prefix_ok_.assign(len_ + 1, true);
      for (std::size_t i = 0; i < len_; ++i) prefix_ok_[i + 1] = prefix_ok_[i] && other_at(i) >= pe.target_at(i);
      suffix_ok_.assign(len_ + 1, true);
      for (std::size_t i = len_; i-- > 1;) suffix_ok_[i - 1] = suffix_ok_[i] && other_at(i - 1) >= pe.target_at(i);
    }

    [[nodiscard]] bool wins(Money bid) const {
      if (pe_.params_.target_revenue == Money{} || bid < pe_.params_.reserve) return false;
      const Bid me{id_, bid};
      const auto pos = static_cast<std::size_t>(
          std::partition_point(others_.begin(), others_.end(), [&](const Bid& o) { return ranks_before(o, me); }) -
          others_.begin());
      if (pos >= pe_.units_) return false;
      return prefix_ok_[pos] && bid >= pe_.target_at(pos) && suffix_ok_[pos];
    }

   private:
    [[nodiscard]] Money other_at(std::size_t i) const { return i < others_.size() ? others_[i].value : Money{}; }

    const ProfitExtractor& pe_;
    AgentId id_;
    std::vector<Bid> others_;
    std::size_t len_ = 0;
    std::vector<bool> prefix_ok_;  // others at ranks [0, p) dominate the target there
    std::vector<bool> suffix_ok_;  // others shifted down one rank dominate the target on (p, len)
  };

  ExtractionParams params_;
  std::vector<Money> target_;
  std::size_t units_;
};

inline std::vector<AgentId> pe_allocation(const ValuationProfile& target, const ValuationProfile& bids,
                                          const Environment& env,
                                          WinnerCountTieBreak tie = WinnerCountTieBreak::smallest) {
  const ProfitExtractor pe(target, env, tie);
  std::vector<AgentId> out;
  for (auto rank : pe.winners(bids.sorted())) out.push_back(bids.sorted()[rank].id);
  return out;
}

inline Money pe_critical_payment(const ValuationProfile& target, const ValuationProfile& bids,
                                 const Environment& env, AgentId agent,
                                 WinnerCountTieBreak tie = WinnerCountTieBreak::smallest) {
  const ProfitExtractor pe(target, env, tie);
  const auto sorted = bids.sorted();
  for (auto rank : pe.winners(sorted))
    if (sorted[rank].id == agent) return pe.critical_value(sorted, rank);
  throw std::invalid_argument("pe_critical_payment: agent " + std::to_string(agent) + " is not served");
}

inline Outcome profit_extract(const ValuationProfile& target, const ValuationProfile& bids, const Environment& env,
                              WinnerCountTieBreak tie = WinnerCountTieBreak::smallest) {
  const ProfitExtractor pe(target, env, tie);
  const auto sorted = bids.sorted();
  Outcome out;
  for (auto rank : pe.winners(sorted)) out.serve(sorted[rank].id, pe.critical_value(sorted, rank));
  return out;
}

}  // namespace bspe

#endif  // BSPE_EXTRACTOR_HPP
