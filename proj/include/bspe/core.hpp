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

#ifndef BSPE_CORE_HPP
#define BSPE_CORE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace bspe {

/// Non-negative amount of money in integer base units. All mechanism logic
/// (dominance, thresholds, payments) runs on this type; there is no rounding.
class Money {
 public:
  using rep = std::int64_t;

  constexpr Money() = default;
  constexpr explicit Money(rep units) : units_(units) {
    if (units < 0) throw std::invalid_argument("Money: negative amount " + std::to_string(units));
  }

  [[nodiscard]] constexpr rep units() const { return units_; }

  friend constexpr auto operator<=>(Money, Money) = default;

  constexpr Money& operator+=(Money other) {
    units_ += other.units_;
    return *this;
  }
  friend constexpr Money operator+(Money a, Money b) { return a += b; }
  friend constexpr Money operator*(std::size_t count, Money m) {
    return Money(static_cast<rep>(count) * m.units_);
  }

  friend std::ostream& operator<<(std::ostream& os, Money m) { return os << m.units_; }

 private:
  rep units_ = 0;
};

inline std::vector<Money> moneys(std::initializer_list<Money::rep> units) {
  std::vector<Money> out;
  out.reserve(units.size());
  for (auto u : units) out.emplace_back(u);
  return out;
}

/// Real agents carry ids >= 0. Negative ids are reserved for zero padding.
using AgentId = std::int64_t;

struct Bid {
  AgentId id = 0;
  Money value;

  [[nodiscard]] bool is_pad() const { return id < 0; }
  friend bool operator==(const Bid&, const Bid&) = default;
};

/// Canonical rank order: value descending, real agents before pad entries,
/// then ascending agent id (pads by ascending |id|).
inline bool ranks_before(const Bid& a, const Bid& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.is_pad() != b.is_pad()) return !a.is_pad();
  return a.is_pad() ? a.id > b.id : a.id < b.id;
}

class ValuationProfile {
 public:
  ValuationProfile() = default;

  explicit ValuationProfile(std::vector<Bid> entries) : entries_(std::move(entries)) {
    std::unordered_set<AgentId> seen;
    for (const auto& e : entries_) {
      if (!seen.insert(e.id).second)
        throw std::invalid_argument("ValuationProfile: duplicate agent id " + std::to_string(e.id));
    }
    sorted_ = entries_;
    std::sort(sorted_.begin(), sorted_.end(), ranks_before);
  }

  [[nodiscard]] std::span<const Bid> entries() const { return entries_; }
  [[nodiscard]] std::span<const Bid> sorted() const { return sorted_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] bool empty() const { return entries_.empty(); }

  /// Value at 0-based rank; zero beyond the end (implicit padding).
  [[nodiscard]] Money value_at(std::size_t rank) const {
    return rank < sorted_.size() ? sorted_[rank].value : Money{};
  }

  [[nodiscard]] std::vector<Money> sorted_values() const {
    std::vector<Money> out;
    out.reserve(sorted_.size());
    for (const auto& b : sorted_) out.push_back(b.value);
    return out;
  }

  [[nodiscard]] std::optional<Money> value_of(AgentId id) const {
    for (const auto& e : entries_)
      if (e.id == id) return e.value;
    return std::nullopt;
  }
  [[nodiscard]] bool contains(AgentId id) const { return value_of(id).has_value(); }

  [[nodiscard]] std::vector<AgentId> agent_ids() const {
    std::vector<AgentId> out;
    for (const auto& e : entries_)
      if (!e.is_pad()) out.push_back(e.id);
    return out;
  }

  /// Same profile with one agent's bid replaced.
  [[nodiscard]] ValuationProfile with_bid(AgentId id, Money value) const {
    auto copy = entries_;
    bool found = false;
    for (auto& e : copy) {
      if (e.id == id) {
        e.value = value;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("with_bid: unknown agent id " + std::to_string(id));
    return ValuationProfile(std::move(copy));
  }

  /// Sub-profile of the given agents, in entry order.
  [[nodiscard]] ValuationProfile restrict_to(std::span<const AgentId> ids) const {
    std::vector<Bid> out;
    for (auto id : ids) {
      auto v = value_of(id);
      if (!v) throw std::invalid_argument("restrict_to: unknown agent id " + std::to_string(id));
      out.push_back({id, *v});
    }
    return ValuationProfile(std::move(out));
  }

 private:
  std::vector<Bid> entries_;
  std::vector<Bid> sorted_;
};

/// Builds a profile from values; ids default to 1..n.
inline ValuationProfile make_profile(std::span<const Money> values,
                                     std::optional<std::span<const AgentId>> ids = std::nullopt) {
  if (ids && ids->size() != values.size())
    throw std::invalid_argument("make_profile: " + std::to_string(ids->size()) + " ids for " +
                                std::to_string(values.size()) + " values");
  std::vector<Bid> entries;
  entries.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    AgentId id = ids ? (*ids)[i] : static_cast<AgentId>(i + 1);
    if (id < 0) throw std::invalid_argument("make_profile: negative agent id " + std::to_string(id));
    entries.push_back({id, values[i]});
  }
  return ValuationProfile(std::move(entries));
}

inline ValuationProfile make_profile(const std::vector<Money>& values, const std::vector<AgentId>& ids) {
  return make_profile(std::span<const Money>(values), std::span<const AgentId>(ids));
}

/// Extends with zero-valued pad entries up to `length`.
inline ValuationProfile pad(const ValuationProfile& profile, std::size_t length) {
  if (length < profile.size())
    throw std::invalid_argument("pad: length " + std::to_string(length) + " below profile size " +
                                std::to_string(profile.size()));
  std::vector<Bid> entries(profile.entries().begin(), profile.entries().end());
  AgentId next_pad = -1;
  for (const auto& e : entries) next_pad = std::min(next_pad, e.id - 1);
  while (entries.size() < length) entries.push_back({next_pad--, Money{}});
  return ValuationProfile(std::move(entries));
}

/// Pointwise dominance of sorted values, shorter side zero-padded.
inline bool dominates(const ValuationProfile& a, const ValuationProfile& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i)
    if (a.value_at(i) < b.value_at(i)) return false;
  return true;
}

/// Highest value lowered to the second highest; a single agent drops to 0.
inline ValuationProfile v_super2(const ValuationProfile& profile) {
  if (profile.empty()) return profile;
  const Bid top = profile.sorted().front();
  return profile.with_bid(top.id, profile.value_at(1));
}

inline ValuationProfile v_minus1(const ValuationProfile& profile) {
  if (profile.empty()) throw std::invalid_argument("v_minus1: empty profile");
  const AgentId top = profile.sorted().front().id;
  std::vector<Bid> rest;
  for (const auto& e : profile.entries())
    if (e.id != top) rest.push_back(e);
  return ValuationProfile(std::move(rest));
}

/// k identical units. Digital goods is units >= number of agents.
class Environment {
 public:
  explicit Environment(std::size_t units) : units_(units) {
    if (units == 0) throw std::invalid_argument("Environment: need at least one unit");
  }
  [[nodiscard]] std::size_t units() const { return units_; }
  [[nodiscard]] bool can_serve(std::size_t count) const { return count <= units_; }

 private:
  std::size_t units_;
};

class Outcome {
 public:
  void serve(AgentId id, Money price) { payments_[id] = price; }

  [[nodiscard]] bool served(AgentId id) const { return payments_.contains(id); }
  [[nodiscard]] Money payment(AgentId id) const {
    auto it = payments_.find(id);
    return it == payments_.end() ? Money{} : it->second;
  }
  [[nodiscard]] std::size_t served_count() const { return payments_.size(); }
  [[nodiscard]] bool nobody_served() const { return payments_.empty(); }

  [[nodiscard]] std::vector<AgentId> served_agents() const {
    std::vector<AgentId> out;
    out.reserve(payments_.size());
    for (const auto& [id, _] : payments_) out.push_back(id);
    return out;
  }

  [[nodiscard]] Money revenue() const {
    Money total;
    for (const auto& [_, p] : payments_) total += p;
    return total;
  }

  /// Utility of a unit-demand agent with the given true value.
  [[nodiscard]] std::int64_t utility(AgentId id, Money value) const {
    return served(id) ? value.units() - payment(id).units() : 0;
  }

  friend bool operator==(const Outcome&, const Outcome&) = default;

 private:
  std::map<AgentId, Money> payments_;
};

/// Throws std::logic_error if the outcome is infeasible or not individually
/// rational with respect to the bids.
inline void validate_outcome(const Outcome& outcome, const ValuationProfile& bids, const Environment& env) {
  if (!env.can_serve(outcome.served_count()))
    throw std::logic_error("outcome serves " + std::to_string(outcome.served_count()) + " agents with " +
                           std::to_string(env.units()) + " units");
  for (AgentId id : outcome.served_agents()) {
    auto bid = bids.value_of(id);
    if (!bid || id < 0) throw std::logic_error("outcome serves non-agent " + std::to_string(id));
    if (outcome.payment(id) > *bid)
      throw std::logic_error("agent " + std::to_string(id) + " pays above bid");
  }
}

}  // namespace bspe

#endif  // BSPE_CORE_HPP
