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

#ifndef BSPE_HARNESS_IC_SCAN_HPP
#define BSPE_HARNESS_IC_SCAN_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "bspe/auction.hpp"
#include "bspe/core.hpp"
#include "bspe/harness/simulate.hpp"
#include "json.hpp"

namespace bspe::harness {

struct IcViolation {
  PartitionAssignment assignment;
  AgentId agent = 0;
  Money value;
  Money deviation;
  std::int64_t truthful_utility = 0;
  std::int64_t deviation_utility = 0;
};

inline void to_json(nlohmann::ordered_json& j, const IcViolation& v) {
  j = nlohmann::ordered_json{{"assignment", v.assignment.to_string()},
                             {"agent", v.agent},
                             {"value", v.value.units()},
                             {"deviation", v.deviation.units()},
                             {"truthful_utility", v.truthful_utility},
                             {"deviation_utility", v.deviation_utility}};
}

/// Every bid at which any comparison in the mechanism can flip, for integer
/// money: all bids and their neighbours, zero, and one above the maximum.
inline std::vector<Money> deviation_grid(const ValuationProfile& bids) {
  std::set<Money::rep> grid{0};
  Money::rep top = 0;
  for (const auto& e : bids.entries()) {
    const auto v = e.value.units();
    top = std::max(top, v);
    for (auto d : {v - 1, v, v + 1})
      if (d >= 0) grid.insert(d);
  }
  grid.insert(top + 1);
  std::vector<Money> out;
  for (auto g : grid) out.emplace_back(g);
  return out;
}

/// All profitable unilateral deviations for one fixed coin assignment.
inline std::vector<IcViolation> ic_scan(const ValuationProfile& bids, const Environment& env,
                                        const PartitionAssignment& assignment, const MechanismOptions& options = {}) {
  std::vector<IcViolation> violations;
  const Outcome truthful = bspe_with_assignment(bids, env, assignment, options);
  const auto grid = deviation_grid(bids);
  for (const auto& e : bids.entries()) {
    const auto honest = truthful.utility(e.id, e.value);
    for (Money d : grid) {
      if (d == e.value) continue;
      const Outcome lie = bspe_with_assignment(bids.with_bid(e.id, d), env, assignment, options);
      const auto gained = lie.utility(e.id, e.value);
      if (gained > honest) violations.push_back({assignment, e.id, e.value, d, honest, gained});
    }
  }
  return violations;
}

inline std::vector<IcViolation> ic_scan_all_assignments(const ValuationProfile& bids, const Environment& env,
                                                        const MechanismOptions& options = {}) {
  std::vector<IcViolation> out;
  for_each_assignment(bids, [&](const PartitionAssignment& a) {
    auto found = ic_scan(bids, env, a, options);
    out.insert(out.end(), found.begin(), found.end());
  });
  return out;
}

}  // namespace bspe::harness

#endif  // BSPE_HARNESS_IC_SCAN_HPP
