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

#ifndef BSPE_HARNESS_STATS_HPP
#define BSPE_HARNESS_STATS_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>

#include "json.hpp"

namespace bspe::harness {

/// Width of every one-sided statistical edge, in standard errors.
inline constexpr double kSigmas = 3.0;

struct StatSummary {
  std::size_t trials = 0;
  double mean = 0.0;
  double stddev = 0.0;     // sample standard deviation
  double std_error = 0.0;  // stddev / sqrt(trials)

  [[nodiscard]] double lower_edge() const { return mean - kSigmas * std_error; }
  [[nodiscard]] double upper_edge() const { return mean + kSigmas * std_error; }
  [[nodiscard]] bool covers(double value) const { return std::abs(mean - value) <= kSigmas * std_error; }
};

/// Two-pass summary in index order, so the result does not depend on how the
/// samples were produced.
template <typename T>
StatSummary summarize(std::span<const T> samples) {
  StatSummary s;
  s.trials = samples.size();
  if (samples.empty()) return s;
  long double sum = 0;
  for (const auto& x : samples) sum += static_cast<long double>(x);
  s.mean = static_cast<double>(sum / samples.size());
  if (samples.size() > 1) {
    long double sq = 0;
    for (const auto& x : samples) {
      const long double d = static_cast<long double>(x) - s.mean;
      sq += d * d;
    }
    s.stddev = static_cast<double>(std::sqrt(sq / (samples.size() - 1)));
    s.std_error = s.stddev / std::sqrt(static_cast<double>(samples.size()));
  }
  return s;
}

inline void to_json(nlohmann::ordered_json& j, const StatSummary& s) {
  j = nlohmann::ordered_json{{"trials", s.trials},
                             {"mean", s.mean},
                             {"stddev", s.stddev},
                             {"stderr", s.std_error},
                             {"lower_3sigma", s.lower_edge()},
                             {"upper_3sigma", s.upper_edge()}};
}

}  // namespace bspe::harness

#endif  // BSPE_HARNESS_STATS_HPP
