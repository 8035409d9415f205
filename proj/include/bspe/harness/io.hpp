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

#ifndef BSPE_HARNESS_IO_HPP
#define BSPE_HARNESS_IO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bspe/core.hpp"
#include "json.hpp"

namespace bspe::harness {

/// Contents of a profile file: `{"values": [int, ...], "units": int}`.
struct ProfileFile {
  ValuationProfile profile;
  std::optional<std::size_t> units;
};

inline ProfileFile parse_profile_json(const std::string& text, const std::string& origin = "<string>") {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(origin + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_array())
    throw std::runtime_error(origin + ": expected an object with a \"values\" array");
  std::vector<Money> values;
  for (const auto& v : doc["values"]) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      throw std::runtime_error(origin + ": values must be non-negative integers, got " + v.dump());
    values.emplace_back(v.get<std::int64_t>());
  }
  ProfileFile out{make_profile(values), std::nullopt};
  if (doc.contains("units")) {
    const auto& u = doc["units"];
    if (!u.is_number_integer() || u.get<std::int64_t>() < 1)
      throw std::runtime_error(origin + ": units must be a positive integer, got " + u.dump());
    out.units = u.get<std::size_t>();
  }
  return out;
}

inline ProfileFile read_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read profile file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_profile_json(buffer.str(), path);
}

inline std::string profile_json(const ValuationProfile& profile, std::optional<std::size_t> units) {
  nlohmann::ordered_json doc;
  doc["values"] = nlohmann::ordered_json::array();
  for (const auto& e : profile.entries()) doc["values"].push_back(e.value.units());
  if (units) doc["units"] = *units;
  return doc.dump();
}

}  // namespace bspe::harness

#endif  // BSPE_HARNESS_IO_HPP
