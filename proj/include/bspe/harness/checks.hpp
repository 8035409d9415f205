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

#ifndef BSPE_HARNESS_CHECKS_HPP
#define BSPE_HARNESS_CHECKS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bspe/analysis.hpp"
#include "bspe/auction.hpp"
#include "bspe/benchmark.hpp"
#include "bspe/core.hpp"
#include "bspe/extractor.hpp"
#include "bspe/harness/ic_scan.hpp"
#include "bspe/harness/simulate.hpp"
#include "bspe/harness/stats.hpp"
#include "bspe/random.hpp"
#include "json.hpp"

namespace bspe::harness {

using Json = nlohmann::ordered_json;

inline Json values_json(const ValuationProfile& profile) {
  Json out = Json::array();
  for (const auto& e : profile.entries()) out.push_back(e.value.units());
  return out;
}

// ---------------------------------------------------------------------------
// Ruin walk

struct RuinReport {
  double p = 0.0;
  std::size_t steps = 0;
  std::size_t start = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double empirical = 0.0;
  double exact = 0.0;  // finite-walk DP
  double bound = 0.0;  // q or q^2
  double sigma = 0.0;
  bool pass = false;
};

inline void to_json(Json& j, const RuinReport& r) {
  j = Json{{"p", r.p},         {"steps", r.steps},         {"start", r.start}, {"trials", r.trials},
           {"seed", r.seed},   {"empirical", r.empirical}, {"exact", r.exact}, {"bound", r.bound},
           {"sigma", r.sigma}, {"pass", r.pass}};
}

inline constexpr std::size_t kRuinBlock = 4096;

/// Simulates the walk that steps back with probability p for `steps` steps
/// from `start` (0, or 1 when the top agent sits in the market) and compares
/// the ruin frequency with the DP value and the closed-form bound.
inline RuinReport check_ruin(double p, std::size_t steps, std::size_t trials, std::uint64_t seed,
                             std::size_t start = 0) {
  const auto closed = analysis::ruin_closed_form(p);
  RuinReport r{p, steps, start, trials, seed};
  r.exact = analysis::ruin_exact_finite(p, steps, start);
  r.bound = start == 0 ? closed.q : closed.q_conditional;

  const RandomSource source(seed ^ (start * 0x5bd1e995ULL));
  std::size_t ruined = 0;
  for (std::size_t block = 0; block * kRuinBlock < trials; ++block) {
    RandomStream rng = source.stream(block);
    const std::size_t end = std::min(trials, (block + 1) * kRuinBlock);
    for (std::size_t t = block * kRuinBlock; t < end; ++t) {
      auto pos = static_cast<std::int64_t>(start);
      for (std::size_t s = 0; s < steps && pos >= 0; ++s) pos += rng.bernoulli(p) ? -1 : 1;
      ruined += pos < 0;
    }
  }
  r.empirical = trials ? double(ruined) / double(trials) : 0.0;
  r.sigma = trials ? std::sqrt(r.exact * (1.0 - r.exact) / double(trials)) : 0.0;
  r.pass = std::abs(r.empirical - r.exact) <= kSigmas * r.sigma && r.exact <= r.bound;
  return r;
}

// ---------------------------------------------------------------------------
// Sampling lemma

struct SamplingReport {
  Json profile;
  std::size_t units = 0;
  double p = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double efo_full = 0.0;
  std::size_t restriction_violations = 0;  // draws with EFO(v_S) < contribution
  StatSummary contribution{};
  StatSummary sample_efo{};
  bool contribution_pass = false;  // mean contribution within 3 sigma of p * EFO(v)
  bool sample_efo_pass = false;    // mean EFO(v_S) >= p * EFO(v) - 3 sigma
  bool pass = false;
};

inline void to_json(Json& j, const SamplingReport& r) {
  j = Json{{"profile", r.profile},
           {"units", r.units},
           {"p", r.p},
           {"trials", r.trials},
           {"seed", r.seed},
           {"target", r.p * r.efo_full},
           {"restriction_violations", r.restriction_violations},
           {"contribution", r.contribution},
           {"sample_efo", r.sample_efo},
           {"pass", {{"restriction", r.restriction_violations == 0},
                     {"contribution", r.contribution_pass},
                     {"sample_efo", r.sample_efo_pass}}}};
}

inline SamplingReport check_sampling(const ValuationProfile& profile, const Environment& env, double p,
                                     std::size_t trials, std::uint64_t seed) {
  SamplingReport r{values_json(profile), env.units(), p, trials, seed};
  r.efo_full = static_cast<double>(efo(profile, env).revenue.units());
  const RandomSource source(seed);
  const auto agents = profile.agent_ids();
  std::vector<Money::rep> contributions(trials), sample_revenue(trials);
  std::vector<AgentId> sample;
  for (std::size_t t = 0; t < trials; ++t) {
    RandomStream rng = source.stream(t);
    sample.clear();
    for (AgentId id : agents)
      if (rng.bernoulli(p)) sample.push_back(id);
    const Money contribution = efo_contribution(profile, env, sample);
    const Money restricted = efo(profile.restrict_to(sample), env).revenue;
    r.restriction_violations += restricted < contribution;
    contributions[t] = contribution.units();
    sample_revenue[t] = restricted.units();
  }
  r.contribution = summarize<Money::rep>(contributions);
  r.sample_efo = summarize<Money::rep>(sample_revenue);
  const double target = p * r.efo_full;
  const double slack = 1e-9 * std::max(1.0, r.efo_full);
  r.contribution_pass = std::abs(r.contribution.mean - target) <= kSigmas * r.contribution.std_error + slack;
  r.sample_efo_pass = r.sample_efo.mean >= target - kSigmas * r.sample_efo.std_error - slack;
  r.pass = r.restriction_violations == 0 && r.contribution_pass && r.sample_efo_pass;
  return r;
}

// ---------------------------------------------------------------------------
// Revenue bounds

struct BoundRow {
  std::string name;
  double bound = 0.0;
  bool applicable = true;
  bool pass = true;
};

struct BoundsReport {
  Json profile;
  std::size_t units = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  StatSummary revenue;
  analysis::ApproxFactors factors;
  std::vector<BoundRow> rows{};
  bool pass = false;
};

inline void to_json(Json& j, const BoundsReport& r) {
  Json bounds = Json::object(), pass = Json::object();
  for (const auto& row : r.rows) {
    bounds[row.name] = row.bound;
    pass[row.name] = row.applicable ? Json(row.pass) : Json("n/a");
  }
  j = Json{{"profile", r.profile},
           {"units", r.units},
           {"p", r.p},
           {"seed", r.seed},
           {"trials", r.revenue.trials},
           {"mean", r.revenue.mean},
           {"stddev", r.revenue.stddev},
           {"stderr", r.revenue.std_error},
           {"factors", {{"r1", r.factors.r1}, {"r2", r.factors.r2}, {"ratio", r.factors.ratio}}},
           {"bounds", bounds},
           {"pass", pass},
           {"all_pass", r.pass}};
}

inline constexpr std::size_t kTheoremMinAgents = 5;

/// Mean BSPE revenue against r1 * EFO(v_-1), r2 * v_2 and EFO(v^(2)) / ratio.
/// The last two gate only with at least five agents.
inline BoundsReport evaluate_bounds(const ValuationProfile& profile, const Environment& env, double p,
                                    const StatSummary& revenue, std::uint64_t seed) {
  BoundsReport r{values_json(profile), env.units(), p, seed, revenue, analysis::factors(p)};
  const bool enough = profile.size() >= kTheoremMinAgents;
  const double efo_minus1 = profile.empty() ? 0.0 : double(efo(v_minus1(profile), env).revenue.units());
  const double second = double(profile.value_at(1).units());
  const double efo_super2 = double(efo(v_super2(profile), env).revenue.units());

  r.rows.push_back({"part1", r.factors.r1 * efo_minus1, true});
  r.rows.push_back({"part2", r.factors.r2 * second, enough});
  r.rows.push_back({"theorem", efo_super2 / r.factors.ratio, enough});
  r.pass = true;
  for (auto& row : r.rows) {
    row.pass = revenue.mean >= row.bound - kSigmas * revenue.std_error;
    if (row.applicable) r.pass = r.pass && row.pass;
  }
  return r;
}

inline BoundsReport check_bounds(const ValuationProfile& profile, const Environment& env, double p,
                                 std::size_t trials, std::uint64_t seed, const MechanismOptions& options = {}) {
  return evaluate_bounds(profile, env, p, run_trials({profile, env.units(), p, trials, seed, options}), seed);
}

// ---------------------------------------------------------------------------
// Monte Carlo against exhaustive enumeration

struct ExpectationReport {
  Json profile;
  std::size_t units = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  double exact = 0.0;
  StatSummary revenue{};
  bool pass = false;
};

inline void to_json(Json& j, const ExpectationReport& r) {
  j = Json{{"profile", r.profile}, {"units", r.units},  {"p", r.p},      {"seed", r.seed},
           {"exact", r.exact},     {"revenue", r.revenue}, {"pass", r.pass}};
}

inline ExpectationReport check_expectation(const ValuationProfile& profile, const Environment& env, double p,
                                           std::size_t trials, std::uint64_t seed) {
  ExpectationReport r{values_json(profile), env.units(), p, seed};
  r.exact = exact_expected_revenue(profile, env, p);
  r.revenue = run_trials({profile, env.units(), p, trials, seed});
  r.pass = r.revenue.covers(r.exact);
  return r;
}

// ---------------------------------------------------------------------------
// Extractor contract fuzzing

struct ExtractorReport {
  std::size_t instances = 0;
  std::uint64_t seed = 0;
  std::size_t dominated = 0;
  std::size_t revenue_shortfalls = 0;  // dominance held, R > 0, revenue < EFO(target)
  std::size_t rejection_failures = 0;  // dominance failed but someone served
  std::size_t invalid_outcomes = 0;    // infeasible or not individually rational
  bool pass = false;
};

inline void to_json(Json& j, const ExtractorReport& r) {
  j = Json{{"instances", r.instances},
           {"seed", r.seed},
           {"dominated", r.dominated},
           {"revenue_shortfalls", r.revenue_shortfalls},
           {"rejection_failures", r.rejection_failures},
           {"invalid_outcomes", r.invalid_outcomes},
           {"pass", r.pass}};
}

struct ExtractorInstance {
  ValuationProfile target;
  ValuationProfile bids;
  std::size_t units = 1;
};

/// Random (target, bids, k) with equal padded length. Half the instances
/// are built to dominate the target by raising each sorted target value.
inline ExtractorInstance random_extractor_instance(RandomStream& rng) {
  const std::size_t len = 1 + rng.below(8);
  const Money::rep scale = rng.bernoulli(0.5) ? 10 : 1000;
  std::vector<Money::rep> target(len), bids(len);
  for (auto& v : target) v = rng.between(0, scale);
  if (rng.bernoulli(0.5)) {
    std::sort(target.begin(), target.end(), std::greater<>());
    for (std::size_t i = 0; i < len; ++i) bids[i] = target[i] + (rng.bernoulli(0.5) ? 0 : rng.between(0, scale / 2));
    for (std::size_t i = len; i > 1; --i) std::swap(bids[i - 1], bids[rng.below(i)]);
  } else {
    for (auto& v : bids) v = rng.between(0, scale);
  }
  std::vector<Money> tm, bm;
  std::vector<AgentId> tid, bid;
  for (std::size_t i = 0; i < len; ++i) {
    tm.emplace_back(target[i]);
    bm.emplace_back(bids[i]);
    tid.push_back(static_cast<AgentId>(100 + i));
    bid.push_back(static_cast<AgentId>(1 + i));
  }
  return {make_profile(tm, tid), make_profile(bm, bid), 1 + rng.below(len + 1)};
}

inline ExtractorReport check_extractor_contract(std::size_t instances, std::uint64_t seed) {
  ExtractorReport r{instances, seed};
  const RandomSource source(seed);
  for (std::size_t i = 0; i < instances; ++i) {
    RandomStream rng = source.stream(i);
    const auto inst = random_extractor_instance(rng);
    const Environment env(inst.units);
    const Outcome out = profit_extract(inst.target, inst.bids, env);
    const Money goal = efo(inst.target, env).revenue;
    try {
      validate_outcome(out, inst.bids, env);
    } catch (const std::logic_error&) {
      ++r.invalid_outcomes;
    }
    if (dominates(inst.bids, inst.target)) {
      ++r.dominated;
      if (goal > Money{} && out.revenue() < goal) ++r.revenue_shortfalls;
    } else if (!out.nobody_served()) {
      ++r.rejection_failures;
    }
  }
  r.pass = r.revenue_shortfalls == 0 && r.rejection_failures == 0 && r.invalid_outcomes == 0;
  return r;
}

// ---------------------------------------------------------------------------
// Incentive compatibility over random small instances

struct IcReport {
  std::size_t instances = 0;
  std::uint64_t seed = 0;
  std::size_t assignments = 0;
  std::vector<IcViolation> violations{};
  bool pass = false;
};

inline void to_json(Json& j, const IcReport& r) {
  j = Json{{"instances", r.instances},
           {"seed", r.seed},
           {"assignments", r.assignments},
           {"violation_count", r.violations.size()},
           {"violations", r.violations},
           {"pass", r.pass}};
}

inline constexpr std::size_t kIcMaxAgents = 5;

/// Random profile with 1..5 agents; alternates narrow value ranges (many
/// ties) with wide ones. Units in [1, n + 1].
inline std::pair<ValuationProfile, std::size_t> random_ic_instance(RandomStream& rng) {
  const std::size_t n = 1 + rng.below(kIcMaxAgents);
  const Money::rep scale = rng.bernoulli(0.5) ? 6 : 100;
  std::vector<Money> values;
  for (std::size_t i = 0; i < n; ++i) values.emplace_back(rng.between(0, scale));
  return {make_profile(values), 1 + rng.below(n + 1)};
}

inline IcReport check_ic(std::size_t instances, std::uint64_t seed, const MechanismOptions& options = {}) {
  IcReport r{instances, seed};
  const RandomSource source(seed);
  for (std::size_t i = 0; i < instances; ++i) {
    RandomStream rng = source.stream(i);
    const auto [bids, units] = random_ic_instance(rng);
    const Environment env(units);
    for_each_assignment(bids, [&](const PartitionAssignment& a) {
      ++r.assignments;
      auto found = ic_scan(bids, env, a, options);
      r.violations.insert(r.violations.end(), found.begin(), found.end());
    });
  }
  r.pass = r.violations.empty();
  return r;
}

// ---------------------------------------------------------------------------
// Closed form against brute force EFO

struct OracleReport {
  std::size_t profiles = 0;
  std::size_t comparisons = 0;
  std::size_t mismatches = 0;
  bool pass = false;
};

inline void to_json(Json& j, const OracleReport& r) {
  j = Json{{"profiles", r.profiles}, {"comparisons", r.comparisons}, {"mismatches", r.mismatches}, {"pass", r.pass}};
}

/// Every value sequence of length <= max_agents over {0..max_value}, every k
/// in [1, n].
inline OracleReport check_oracle_equivalence(std::size_t max_agents, Money::rep max_value) {
  OracleReport r;
  for (std::size_t n = 1; n <= max_agents; ++n) {
    std::vector<Money::rep> digits(n, 0);
    for (;;) {
      std::vector<Money> values;
      for (auto d : digits) values.emplace_back(d);
      const auto profile = make_profile(values);
      ++r.profiles;
      for (std::size_t k = 1; k <= n; ++k) {
        const Environment env(k);
        ++r.comparisons;
        r.mismatches += efo(profile, env).revenue != efo_bruteforce(profile, env);
      }
      std::size_t i = 0;
      while (i < n && ++digits[i] > max_value) digits[i++] = 0;
      if (i == n) break;
    }
  }
  r.pass = r.mismatches == 0;
  return r;
}

}  // namespace bspe::harness

#endif  // BSPE_HARNESS_CHECKS_HPP
