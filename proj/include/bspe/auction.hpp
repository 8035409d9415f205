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

#ifndef BSPE_AUCTION_HPP
#define BSPE_AUCTION_HPP

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bspe/benchmark.hpp"
#include "bspe/core.hpp"
#include "bspe/extractor.hpp"
#include "bspe/random.hpp"

namespace bspe {

enum class Group : unsigned char { A, B, C };

inline char group_name(Group g) { return g == Group::A ? 'A' : g == Group::B ? 'B' : 'C'; }

/// Probability p of each of the two coin groups; the rest go to C.
class SamplingBias {
 public:
  explicit SamplingBias(double p) : p_(p) {
    if (!(p > 0.0 && p < 0.5)) throw std::invalid_argument("SamplingBias: p must lie in (0, 0.5), got " + std::to_string(p));
  }
  [[nodiscard]] double p() const { return p_; }

 private:
  double p_;
};

class PartitionAssignment {
 public:
  PartitionAssignment() = default;
  explicit PartitionAssignment(std::map<AgentId, Group> labels) : labels_(std::move(labels)) {}

  void assign(AgentId id, Group g) { labels_[id] = g; }

  [[nodiscard]] Group group_of(AgentId id) const {
    auto it = labels_.find(id);
    if (it == labels_.end()) throw std::invalid_argument("PartitionAssignment: unlabeled agent " + std::to_string(id));
    return it->second;
  }
  [[nodiscard]] const std::map<AgentId, Group>& labels() const { return labels_; }
  [[nodiscard]] std::size_t size() const { return labels_.size(); }

  [[nodiscard]] std::string to_string() const {
    std::string s;
    for (const auto& [id, g] : labels_) s += std::to_string(id) + ":" + group_name(g) + " ";
    if (!s.empty()) s.pop_back();
    return s;
  }

  friend bool operator==(const PartitionAssignment&, const PartitionAssignment&) = default;

 private:
  std::map<AgentId, Group> labels_;
};

/// Independent A/B/C label per agent with probabilities p, p, 1 - 2p. One
/// uniform draw per agent, in the order given.
inline PartitionAssignment partition(std::span<const AgentId> agents, const SamplingBias& bias, RandomStream& rng) {
  PartitionAssignment out;
  for (AgentId id : agents) {
    const double u = rng.uniform01();
    out.assign(id, u < bias.p() ? Group::A : u < 2.0 * bias.p() ? Group::B : Group::C);
  }
  return out;
}

/// Market/sample split after the A/B relabeling that puts the higher top bid
/// in A. Ties keep the coin labels.
struct Orientation {
  std::vector<AgentId> market_group;  // post-swap A
  std::vector<AgentId> sample_group;  // post-swap B
  std::vector<AgentId> other_group;   // C
  bool swapped = false;

  [[nodiscard]] std::vector<AgentId> market() const {
    auto m = market_group;
    m.insert(m.end(), other_group.begin(), other_group.end());
    return m;
  }
  [[nodiscard]] const std::vector<AgentId>& sample() const { return sample_group; }
};

inline Orientation orient(const PartitionAssignment& assignment, const ValuationProfile& bids) {
  Orientation o;
  Money max_a, max_b;
  for (const auto& e : bids.entries()) {
    switch (assignment.group_of(e.id)) {
      case Group::A:
        o.market_group.push_back(e.id);
        max_a = std::max(max_a, e.value);
        break;
      case Group::B:
        o.sample_group.push_back(e.id);
        max_b = std::max(max_b, e.value);
        break;
      case Group::C:
        o.other_group.push_back(e.id);
        break;
    }
  }
  if (max_b > max_a) {
    std::swap(o.market_group, o.sample_group);
    o.swapped = true;
  }
  return o;
}

/// Knobs that exist so the incentive scanner can reproduce the known
/// failure modes. Defaults are the mechanism as specified.
struct MechanismOptions {
  bool payment_bump = true;
  WinnerCountTieBreak winner_count_tie = WinnerCountTieBreak::smallest;
};

/// Which step produced the outcome of a single run.
enum class Resolution { extractor, fallback, none };

struct AuctionTrace {
  Orientation orientation;
  ExtractionParams params;
  bool bumped = false;
  Resolution resolution = Resolution::none;
};

/// Biased sampling profit extraction for one fixed coin assignment.
inline Outcome bspe_with_assignment(const ValuationProfile& bids, const Environment& env,
                                    const PartitionAssignment& assignment, const MechanismOptions& options = {},
                                    AuctionTrace* trace = nullptr) {
  const Orientation orientation = orient(assignment, bids);

  std::vector<Bid> market, sample;
  std::vector<Bid> top_group;
  Money sample_max;
  for (const auto& e : bids.entries()) {
    const Group g = assignment.group_of(e.id);
    const bool in_sample = (g == Group::B) != orientation.swapped && g != Group::C;
    if (in_sample) {
      sample.push_back(e);
      sample_max = std::max(sample_max, e.value);
    } else {
      market.push_back(e);
      if (g != Group::C) top_group.push_back(e);
    }
  }

  const std::size_t len = std::max(market.size(), sample.size());
  const ValuationProfile target = pad(ValuationProfile(std::move(sample)), len);
  const ValuationProfile market_bids = pad(ValuationProfile(std::move(market)), len);

  const ProfitExtractor extractor(target, env, options.winner_count_tie);
  const auto sorted = market_bids.sorted();
  Outcome outcome;
  for (auto rank : extractor.winners(sorted)) outcome.serve(sorted[rank].id, extractor.critical_value(sorted, rank));

  bool bumped = false;
  if (options.payment_bump && !top_group.empty()) {
    std::sort(top_group.begin(), top_group.end(), ranks_before);
    const Bid top = top_group.front();
    const Money runner_up = top_group.size() > 1 ? top_group[1].value : Money{};
    // The top agent alone keeps her group in the market when the rest of it
    // would lose the orientation comparison (ties go to the coin's A group).
    const bool pivotal = orientation.swapped ? runner_up <= sample_max : runner_up < sample_max;
    if (pivotal && outcome.served(top.id) && outcome.payment(top.id) < sample_max) {
      outcome.serve(top.id, sample_max);
      bumped = true;
    }
  }

  Resolution resolution = outcome.nobody_served() ? Resolution::none : Resolution::extractor;
  if (outcome.nobody_served() && !bids.empty() && env.can_serve(1)) {
    outcome.serve(bids.sorted()[0].id, bids.value_at(1));
    resolution = Resolution::fallback;
  }

  if (trace) *trace = {orientation, extractor.params(), bumped, resolution};
  return outcome;
}

inline Outcome bspe_run(const ValuationProfile& bids, const Environment& env, const SamplingBias& bias,
                        RandomStream& rng, const MechanismOptions& options = {}) {
  const auto agents = bids.agent_ids();
  return bspe_with_assignment(bids, env, partition(agents, bias, rng), options);
}

/// Single-unit second-price auction.
inline Outcome vickrey_1unit(const ValuationProfile& bids) {
  Outcome out;
  if (!bids.empty()) out.serve(bids.sorted()[0].id, bids.value_at(1));
  return out;
}

}  // namespace bspe

#endif  // BSPE_AUCTION_HPP
