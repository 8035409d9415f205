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

#ifndef BSPE_ANALYSIS_HPP
#define BSPE_ANALYSIS_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace bspe::analysis {

inline void require_bias(double p, const char* where) {
  if (!(p > 0.0 && p < 0.5)) throw std::invalid_argument(std::string(where) + ": p must lie in (0, 0.5)");
}

/// Ruin probabilities of the +1/-1 walk that steps back with probability p.
struct RuinBounds {
  double q = 0.0;              // from position 0
  double q_conditional = 0.0;  // from position 1
};

inline RuinBounds ruin_closed_form(double p) {
  require_bias(p, "ruin_closed_form");
  const double q = p / (1.0 - p);
  return {q, q * q};
}

/// Exact probability that the walk started at `start` goes below 0 within
/// `steps` steps. Dynamic program over positions.
inline double ruin_exact_finite(double p, std::size_t steps, std::size_t start = 0) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("ruin_exact_finite: p must lie in [0, 1]");
  std::vector<double> mass(start + steps + 2, 0.0), next(mass.size(), 0.0);
  mass[start] = 1.0;
  double ruined = 0.0;
  for (std::size_t t = 0; t < steps; ++t) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t pos = 0; pos + 1 < mass.size(); ++pos) {
      if (mass[pos] == 0.0) continue;
      if (pos == 0)
        ruined += mass[pos] * p;
      else
        next[pos - 1] += mass[pos] * p;
      next[pos + 1] += mass[pos] * (1.0 - p);
    }
    mass.swap(next);
  }
  return ruined;
}

struct ApproxFactors {
  double r1 = 0.0;     // against EFO(v without the top agent)
  double r2 = 0.0;     // against the second highest value
  double ratio = 0.0;  // (r1 + r2) / (r1 r2); infinite when r1 <= 0
};

inline ApproxFactors factors(double p) {
  const double q = p / (1.0 - p);
  ApproxFactors f;
  f.r1 = p - q * q;
  f.r2 = p + (1.0 - p) * p * p * p;
  f.ratio = f.r1 > 0.0 ? (f.r1 + f.r2) / (f.r1 * f.r2) : std::numeric_limits<double>::infinity();
  return f;
}

inline double ratio(double p) { return factors(p).ratio; }

/// Root of r1(p) = 0 in (0, 0.5) by bisection; r1 > 0 below it.
inline double r1_root(double tolerance = 1e-15) {
  double lo = 0.1, hi = 0.5;  // r1(0.1) > 0 > r1(0.5)
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (factors(mid).r1 > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct RatioMinimum {
  double p = 0.0;
  double ratio = 0.0;
  bool single_basin = true;  // coarse pre-scan saw one local minimum
};

/// Minimizes ratio(p) on [lo, hi]. A coarse grid locates the basin (and a
/// fine grid takes over if the coarse one shows several local minima), then
/// golden-section search refines it.
inline RatioMinimum minimize_ratio(double lo, double hi, double tolerance) {
  if (!(lo > 0.0 && hi >= lo && hi < r1_root() && tolerance > 0.0))
    throw std::invalid_argument("minimize_ratio: need 0 < lo <= hi < root of r1 and tolerance > 0");
  if (hi == lo) return {lo, ratio(lo), true};

  auto grid_scan = [&](std::size_t points, std::size_t& best, std::size_t& minima) {
    std::vector<double> values(points + 1);
    for (std::size_t i = 0; i <= points; ++i) values[i] = ratio(lo + (hi - lo) * double(i) / double(points));
    best = 0;
    minima = 0;
    for (std::size_t i = 0; i <= points; ++i) {
      if (values[i] < values[best]) best = i;
      const bool left = i == 0 || values[i] < values[i - 1];
      const bool right = i == points || values[i] <= values[i + 1];
      if (left && right) ++minima;
    }
  };

  std::size_t points = 64, best = 0, minima = 0;
  grid_scan(points, best, minima);
  const bool single_basin = minima <= 1;
  if (!single_basin) {
    points = 1u << 16;
    grid_scan(points, best, minima);
  }
  const double step = (hi - lo) / double(points);
  double a = std::max(lo, lo + step * (double(best) - 1.0));
  double b = std::min(hi, lo + step * (double(best) + 1.0));

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = ratio(c), fd = ratio(d);
  while (b - a > tolerance) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = ratio(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = ratio(d);
    }
  }
  const double p_star = 0.5 * (a + b);
  return {p_star, ratio(p_star), single_basin};
}

}  // namespace bspe::analysis

#endif  // BSPE_ANALYSIS_HPP
