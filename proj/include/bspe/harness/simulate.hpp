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

#ifndef BSPE_HARNESS_SIMULATE_HPP
#define BSPE_HARNESS_SIMULATE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <functional>
#include <thread>
#include <vector>

#include "bspe/auction.hpp"
#include "bspe/core.hpp"
#include "bspe/harness/stats.hpp"
#include "bspe/random.hpp"

namespace bspe::harness {

struct SimConfig {
  ValuationProfile profile;
  std::size_t units = 1;
  double p = 0.26;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  MechanismOptions options{};
  unsigned workers = 1;

  void validate() const {
    if (trials < 1) throw std::invalid_argument("SimConfig: trial_count must be at least 1");
    SamplingBias{p};
    Environment{units};
  }
};

/// Revenue of every trial, trial t drawing its coins from substream t.
/// Identical for any worker count.
inline std::vector<Money::rep> trial_revenues(const SimConfig& config) {
  config.validate();
  const Environment env(config.units);
  const SamplingBias bias(config.p);
  const RandomSource source(config.seed);
  std::vector<Money::rep> revenues(config.trials);

  auto work = [&](unsigned worker, unsigned stride) {
    for (std::size_t t = worker; t < config.trials; t += stride) {
      RandomStream rng = source.stream(t);
      const Outcome outcome = bspe_run(config.profile, env, bias, rng, config.options);
      revenues[t] = outcome.revenue().units();
    }
  };

  const unsigned workers = std::max(1u, config.workers);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }
  return revenues;
}

inline StatSummary run_trials(const SimConfig& config) {
  const auto revenues = trial_revenues(config);
  return summarize<Money::rep>(revenues);
}

inline constexpr std::size_t kExhaustiveMaxAgents = 12;

/// Calls `visit` with each of the 3^n labelings of the profile's agents.
inline void for_each_assignment(const ValuationProfile& bids,
                                const std::function<void(const PartitionAssignment&)>& visit) {
  const auto agents = bids.agent_ids();
  std::vector<int> digits(agents.size(), 0);
  for (;;) {
    PartitionAssignment assignment;
    for (std::size_t i = 0; i < agents.size(); ++i) assignment.assign(agents[i], static_cast<Group>(digits[i]));
    visit(assignment);
    std::size_t i = 0;
    while (i < agents.size() && ++digits[i] == 3) digits[i++] = 0;
    if (i == agents.size()) break;
  }
}

/// Exact expected revenue: sum over all 3^n coin assignments weighted by
/// p^{|A|+|B|} (1-2p)^{|C|}.
inline double exact_expected_revenue(const ValuationProfile& profile, const Environment& env, double p,
                                     const MechanismOptions& options = {}) {
  SamplingBias{p};
  const auto agents = profile.agent_ids();
  const std::size_t n = agents.size();
  if (n > kExhaustiveMaxAgents)
    throw std::invalid_argument("exact_expected_revenue: " + std::to_string(n) + " agents exceeds limit");

  long double expectation = 0;
  for_each_assignment(profile, [&](const PartitionAssignment& assignment) {
    std::size_t coin = 0;
    for (const auto& [_, g] : assignment.labels()) coin += g != Group::C;
    const long double weight =
        std::pow(static_cast<long double>(p), coin) * std::pow(1.0L - 2.0L * p, static_cast<long double>(n - coin));
    expectation += weight * bspe_with_assignment(profile, env, assignment, options).revenue().units();
  });
  return static_cast<double>(expectation);
}

}  // namespace bspe::harness

#endif  // BSPE_HARNESS_SIMULATE_HPP
