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

#include <gtest/gtest.h>

#include <cmath>
#include <string_view>
#include <vector>

#include "bspe/auction.hpp"
#include "bspe/harness/ic_scan.hpp"

namespace bspe {
namespace {

// Labels by agent id 1..n, e.g. "ABBCC".
PartitionAssignment labels(std::string_view groups) {
  PartitionAssignment a;
  for (std::size_t i = 0; i < groups.size(); ++i)
    a.assign(static_cast<AgentId>(i + 1), groups[i] == 'A' ? Group::A : groups[i] == 'B' ? Group::B : Group::C);
  return a;
}

std::vector<AgentId> ids(std::initializer_list<AgentId> list) { return list; }

TEST(SamplingBias, OpenIntervalOnly) {
  EXPECT_THROW(SamplingBias(0.0), std::invalid_argument);
  EXPECT_THROW(SamplingBias(0.5), std::invalid_argument);
  EXPECT_THROW(SamplingBias(-0.1), std::invalid_argument);
  EXPECT_NO_THROW(SamplingBias(0.26));
}

TEST(Partition, VanishingBiasPutsEveryoneInC) {
  std::vector<AgentId> agents;
  for (AgentId i = 1; i <= 500; ++i) agents.push_back(i);
  RandomStream rng = RandomSource(1).stream(0);
  const auto a = partition(agents, SamplingBias(1e-12), rng);
  for (const auto& [_, g] : a.labels()) EXPECT_EQ(g, Group::C);
}

TEST(Partition, GroupSizesMatchBias) {
  const std::size_t n = 10000;
  std::vector<AgentId> agents;
  for (std::size_t i = 1; i <= n; ++i) agents.push_back(static_cast<AgentId>(i));
  RandomStream rng = RandomSource(2026).stream(0);
  const auto a = partition(agents, SamplingBias(0.26), rng);
  std::size_t count[3] = {0, 0, 0};
  for (const auto& [_, g] : a.labels()) ++count[static_cast<int>(g)];
  const double sd = std::sqrt(0.26 * 0.74 / n);
  EXPECT_NEAR(double(count[0]) / n, 0.26, 4 * sd);
  EXPECT_NEAR(double(count[1]) / n, 0.26, 4 * sd);
  EXPECT_NEAR(double(count[2]) / n, 0.48, 4 * std::sqrt(0.48 * 0.52 / n));
}

TEST(Partition, DeterministicPerStream) {
  const auto agents = ids({1, 2, 3, 4, 5, 6, 7, 8});
  const RandomSource source(77);
  RandomStream a = source.stream(3), b = source.stream(3);
  EXPECT_EQ(partition(agents, SamplingBias(0.3), a), partition(agents, SamplingBias(0.3), b));
}

TEST(Orient, HigherTopStaysInA) {
  const auto bids = make_profile(moneys({8, 2, 5}));
  const auto o = orient(labels("AAB"), bids);
  EXPECT_FALSE(o.swapped);
  EXPECT_EQ(o.market(), ids({1, 2}));
  EXPECT_EQ(o.sample(), ids({3}));
}

TEST(Orient, SwapsWhenBHasTheHigherTop) {
  const auto bids = make_profile(moneys({5, 8, 1}));
  const auto o = orient(labels("ABC"), bids);
  EXPECT_TRUE(o.swapped);
  EXPECT_EQ(o.market(), ids({2, 3}));
  EXPECT_EQ(o.sample(), ids({1}));
}

TEST(Orient, TieKeepsLabels) {
  const auto o = orient(labels("AB"), make_profile(moneys({6, 6})));
  EXPECT_FALSE(o.swapped);
  EXPECT_EQ(o.market(), ids({1}));
}

TEST(Orient, EmptyGroupCountsAsZero) {
  EXPECT_FALSE(orient(labels("CB"), make_profile(moneys({9, 0}))).swapped);
  EXPECT_TRUE(orient(labels("CB"), make_profile(moneys({9, 1}))).swapped);
}

TEST(BspeRun, ExtractorWithPaymentBump) {
  // A={80}, B={70,65}, C={90,66}: market (90,80,66) against (70,65,0); all
  // three clear the reserve 65, and the A-top is bumped to 70.
  const auto bids = make_profile(moneys({80, 70, 65, 90, 66}));
  AuctionTrace trace;
  const auto out = bspe_with_assignment(bids, Environment(3), labels("ABBCC"), {}, &trace);
  EXPECT_EQ(trace.resolution, Resolution::extractor);
  EXPECT_EQ(trace.params.winner_quota, 2u);
  EXPECT_EQ(trace.params.reserve, Money(65));
  EXPECT_TRUE(trace.bumped);
  EXPECT_EQ(out.served_agents(), ids({1, 4, 5}));
  EXPECT_EQ(out.payment(4), Money(65));
  EXPECT_EQ(out.payment(5), Money(65));
  EXPECT_EQ(out.payment(1), Money(70));
  EXPECT_EQ(out.revenue(), Money(200));
}

TEST(BspeRun, FallbackWhenDominanceFails) {
  const auto bids = make_profile(moneys({8, 7, 6, 5, 4}));
  for (std::size_t k : {2u, 5u}) {
    AuctionTrace trace;
    const auto out = bspe_with_assignment(bids, Environment(k), labels("ABBCC"), {}, &trace);
    EXPECT_EQ(trace.resolution, Resolution::fallback);
    EXPECT_EQ(out.served_agents(), ids({1}));
    EXPECT_EQ(out.payment(1), Money(7));
  }
}

TEST(BspeRun, SingleAgentIsServedFree) {
  const auto bids = make_profile(moneys({7}));
  for (auto g : {"A", "B", "C"}) {
    const auto out = bspe_with_assignment(bids, Environment(1), labels(g));
    EXPECT_EQ(out.served_agents(), ids({1}));
    EXPECT_EQ(out.payment(1), Money(0));
  }
}

TEST(BspeRun, EmptyProfile) {
  RandomStream rng = RandomSource(1).stream(0);
  EXPECT_TRUE(bspe_run(make_profile(moneys({})), Environment(1), SamplingBias(0.26), rng).nobody_served());
}

TEST(BspeRun, BumpDisabledLeavesCriticalPayment) {
  const auto bids = make_profile(moneys({80, 70, 65, 90, 66}));
  const auto out = bspe_with_assignment(bids, Environment(3), labels("ABBCC"), {.payment_bump = false});
  EXPECT_EQ(out.payment(1), Money(65));
}

TEST(BspeRun, InvariantsOverRandomRuns) {
  const RandomSource source(5);
  for (std::size_t i = 0; i < 4000; ++i) {
    RandomStream rng = source.stream(i);
    const std::size_t n = rng.below(9);
    std::vector<Money> values;
    for (std::size_t j = 0; j < n; ++j) values.emplace_back(rng.between(0, rng.bernoulli(0.5) ? 8 : 1000));
    const auto bids = make_profile(values);
    const Environment env(1 + rng.below(n + 2));
    const SamplingBias bias(0.05 + 0.4 * rng.uniform01());
    const auto assignment = partition(bids.agent_ids(), bias, rng);

    AuctionTrace trace;
    const auto out = bspe_with_assignment(bids, env, assignment, {}, &trace);
    ASSERT_NO_THROW(validate_outcome(out, bids, env));
    if (trace.resolution == Resolution::fallback) {
      ASSERT_EQ(out.served_count(), 1u);
      ASSERT_EQ(out.served_agents().front(), bids.sorted().front().id);
      ASSERT_EQ(out.payment(bids.sorted().front().id), bids.value_at(1));
    }
    if (!bids.empty()) {
      ASSERT_NE(trace.resolution, Resolution::none);
    }
    ASSERT_EQ(bspe_with_assignment(bids, env, assignment), out);
  }
}

TEST(BspeRun, SameStreamSameOutcome) {
  const auto bids = make_profile(moneys({10, 8, 5, 4, 2, 9, 1}));
  const RandomSource source(8);
  for (std::uint64_t t = 0; t < 50; ++t) {
    RandomStream a = source.stream(t), b = source.stream(t);
    EXPECT_EQ(bspe_run(bids, Environment(3), SamplingBias(0.26), a),
              bspe_run(bids, Environment(3), SamplingBias(0.26), b));
  }
}

TEST(IcRegression, OrientationFlipNeedsBumpAndHighReserve) {
  // A={80,40}, B={70}, C={90,50}: the sample agent bidding 81 flips the
  // orientation; with the loose reserve and no bump she wins at 40.
  const auto bids = make_profile(moneys({80, 40, 70, 90, 50}));
  const auto assignment = labels("AABCC");
  const Environment env(5);
  const auto broken = harness::ic_scan(bids, env, assignment, {false, WinnerCountTieBreak::largest});
  ASSERT_FALSE(broken.empty());
  bool found = false;
  for (const auto& v : broken)
    found = found || (v.agent == 3 && v.deviation == Money(81) && v.deviation_utility == 30 && v.truthful_utility == 0);
  EXPECT_TRUE(found);
  EXPECT_TRUE(harness::ic_scan(bids, env, assignment).empty());
}

TEST(IcScan, SingleAgentHasNothingToGain) {
  const auto bids = make_profile(moneys({7}));
  EXPECT_TRUE(harness::ic_scan_all_assignments(bids, Environment(1)).empty());
}

TEST(IcScan, TiedSmallInstancesAreTruthful) {
  for (const auto& values : {moneys({5, 5, 4, 0, 5}), moneys({15, 22, 64, 25, 22}), moneys({3, 3, 3}),
                             moneys({6, 6, 1, 1})}) {
    const auto bids = make_profile(values);
    for (std::size_t k = 1; k <= values.size(); ++k)
      EXPECT_TRUE(harness::ic_scan_all_assignments(bids, Environment(k)).empty()) << "k=" << k;
  }
}

TEST(Vickrey1Unit, Examples) {
  const auto a = vickrey_1unit(make_profile(moneys({10, 8, 5})));
  EXPECT_EQ(a.served_agents(), ids({1}));
  EXPECT_EQ(a.payment(1), Money(8));
  const auto b = vickrey_1unit(make_profile(moneys({7})));
  EXPECT_EQ(b.payment(1), Money(0));
  EXPECT_TRUE(b.served(1));
  const auto c = vickrey_1unit(make_profile(moneys({7, 7}), {5, 2}));
  EXPECT_EQ(c.served_agents(), ids({2}));
  EXPECT_EQ(c.payment(2), Money(7));
  EXPECT_TRUE(vickrey_1unit(make_profile(moneys({}))).nobody_served());
}

}  // namespace
}  // namespace bspe
