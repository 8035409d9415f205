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

#ifndef BSPE_HARNESS_GENERATORS_HPP
#define BSPE_HARNESS_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bspe/core.hpp"
#include "bspe/random.hpp"

namespace bspe::harness {

enum class ProfileKind { equal_revenue, uniform, bimodal, constant };

inline ProfileKind parse_profile_kind(std::string_view name) {
  if (name == "equal_revenue") return ProfileKind::equal_revenue;
  if (name == "uniform") return ProfileKind::uniform;
  if (name == "bimodal") return ProfileKind::bimodal;
  if (name == "constant") return ProfileKind::constant;
  throw std::invalid_argument("unknown profile kind '" + std::string(name) +
                              "' (expected equal_revenue, uniform, bimodal or constant)");
}

inline std::string_view profile_kind_name(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::equal_revenue: return "equal_revenue";
    case ProfileKind::uniform: return "uniform";
    case ProfileKind::bimodal: return "bimodal";
    case ProfileKind::constant: return "constant";
  }
  return "?";
}

/// equal_revenue: v_i = floor(scale / i). uniform: iid in [1, scale].
/// bimodal: fair mixture of [1, scale/10] and [scale/2, scale].
/// constant: every value = scale.
inline ValuationProfile generate_profile(ProfileKind kind, std::size_t n, std::uint64_t seed, Money::rep scale) {
  if (scale < 1) throw std::invalid_argument("generate_profile: scale must be positive");
  RandomStream rng = RandomSource(seed).stream(0);
  std::vector<Money> values;
  values.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    switch (kind) {
      case ProfileKind::equal_revenue: values.emplace_back(scale / static_cast<Money::rep>(i)); break;
      case ProfileKind::uniform: values.emplace_back(rng.between(1, scale)); break;
      case ProfileKind::bimodal:
        if (rng.bernoulli(0.5))
          values.emplace_back(rng.between(1, std::max<Money::rep>(1, scale / 10)));
        else
          values.emplace_back(rng.between(std::max<Money::rep>(1, scale / 2), scale));
        break;
      case ProfileKind::constant: values.emplace_back(scale); break;
    }
  }
  return make_profile(values);
}

inline ValuationProfile generate_profile(std::string_view kind, std::size_t n, std::uint64_t seed, Money::rep scale) {
  return generate_profile(parse_profile_kind(kind), n, seed, scale);
}

}  // namespace bspe::harness

#endif  // BSPE_HARNESS_GENERATORS_HPP
