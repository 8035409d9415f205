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

#ifndef BSPE_HARNESS_VERIFY_HPP
#define BSPE_HARNESS_VERIFY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bspe/harness/checks.hpp"
#include "bspe/harness/generators.hpp"

namespace bspe::harness {

struct BatteryEntry {
  std::string name;
  ValuationProfile profile;
  std::size_t units = 1;
};

/// Profiles covering every generator kind, n in {5, 10, 50} and
/// k in {1, ceil(n/2), n}.
inline std::vector<BatteryEntry> standard_battery() {
  struct Entry {
    ProfileKind kind;
    std::size_t n;
    std::size_t units;
    Money::rep scale;
  };
  const Entry entries[] = {
      {ProfileKind::equal_revenue, 5, 5, 3600},   {ProfileKind::uniform, 5, 1, 1000},
      {ProfileKind::constant, 5, 3, 100},         {ProfileKind::bimodal, 10, 5, 1000},
      {ProfileKind::constant, 10, 10, 100},       {ProfileKind::uniform, 10, 1, 1000},
      {ProfileKind::equal_revenue, 50, 25, 3600}, {ProfileKind::uniform, 50, 50, 1000},
      {ProfileKind::bimodal, 50, 1, 1000},
  };
  std::vector<BatteryEntry> out;
  std::uint64_t seed = 11;
  for (const auto& s : entries) {
    out.push_back({std::string(profile_kind_name(s.kind)) + "_n" + std::to_string(s.n) + "_k" +
                       std::to_string(s.units),
                   generate_profile(s.kind, s.n, seed++, s.scale), s.units});
  }
  return out;
}

/// Profiles small enough for the exhaustive 3^n expectation.
inline std::vector<BatteryEntry> small_battery() {
  return {
      {"example_5", make_profile(moneys({10, 8, 5, 4, 2})), 5},
      {"equal_revenue_6", generate_profile(ProfileKind::equal_revenue, 6, 1, 3600), 3},
      {"uniform_8", generate_profile(ProfileKind::uniform, 8, 2, 100), 8},
      {"bimodal_9", generate_profile(ProfileKind::bimodal, 9, 3, 1000), 4},
      {"uniform_10", generate_profile(ProfileKind::uniform, 10, 4, 1000), 1},
  };
}

/// Sizes for `verify`. The defaults keep `verify all` to well under a
/// minute; the acceptance suite runs the same checks at full size.
struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 20000;
  std::size_t ruin_trials = 100000;
  std::size_t ruin_steps = 200;
  std::size_t extractor_instances = 20000;
  std::size_t ic_instances = 40;
  double p = 0.26;
};

inline const std::vector<std::string_view>& verify_suites() {
  static const std::vector<std::string_view> suites{"ruin", "sampling", "extractor", "ic", "bounds"};
  return suites;
}

/// Runs one suite (or "all") and returns its JSON report. The report has a
/// top-level boolean "pass".
inline Json run_verify(std::string_view suite, const VerifyOptions& opt) {
  if (suite == "all") {
    Json out{{"seed", opt.seed}};
    bool pass = true;
    Json verdicts = Json::object();
    for (auto name : verify_suites()) {
      Json r = run_verify(name, opt);
      verdicts[std::string(name)] = r["pass"];
      pass = pass && r["pass"].get<bool>();
      out[std::string(name)] = std::move(r);
    }
    out["verdicts"] = verdicts;
    out["pass"] = pass;
    return out;
  }

  Json rows = Json::array();
  bool pass = true;
  if (suite == "ruin") {
    for (double p : {0.10, 0.26, 0.40}) {
      for (std::size_t start : {0u, 1u}) {
        const auto r = check_ruin(p, opt.ruin_steps, opt.ruin_trials, opt.seed, start);
        pass = pass && r.pass;
        rows.push_back(r);
      }
    }
  } else if (suite == "sampling") {
    for (const auto& b : standard_battery()) {
      const auto r = check_sampling(b.profile, Environment(b.units), opt.p, opt.trials, opt.seed);
      pass = pass && r.pass;
      rows.push_back(Json{{"name", b.name}, {"report", r}});
    }
  } else if (suite == "extractor") {
    const auto r = check_extractor_contract(opt.extractor_instances, opt.seed);
    pass = r.pass;
    rows.push_back(r);
  } else if (suite == "ic") {
    const auto r = check_ic(opt.ic_instances, opt.seed);
    pass = r.pass;
    rows.push_back(r);
  } else if (suite == "bounds") {
    for (const auto& b : standard_battery()) {
      const auto r = check_bounds(b.profile, Environment(b.units), opt.p, opt.trials, opt.seed);
      pass = pass && r.pass;
      rows.push_back(Json{{"name", b.name}, {"report", r}});
    }
  } else {
    throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
  }
  return Json{{"suite", suite}, {"seed", opt.seed}, {"results", rows}, {"pass", pass}};
}

}  // namespace bspe::harness

#endif  // BSPE_HARNESS_VERIFY_HPP
