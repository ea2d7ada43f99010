// Copyright 2026 The permzk Authors
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

#include "permzk/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numeric>
#include <vector>

#include "permzk/error.hpp"

namespace permzk {

double chi_square_survival(double statistic, std::size_t dof) {
  if (dof == 0) return 1.0;
  const boost::math::chi_squared dist(static_cast<double>(dof));
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> counts,
                               std::span<const double> probabilities) {
  if (counts.size() != probabilities.size() || counts.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "chi-square: cell count mismatch");
  }
  const double n = static_cast<double>(std::accumulate(counts.begin(), counts.end(), 0ULL));
  ChiSquareResult r;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = n * probabilities[i];
    if (expected <= 0) {
      if (counts[i] > 0) r.statistic = INFINITY;
      continue;
    }
    ++cells;
    const double d = static_cast<double>(counts[i]) - expected;
    r.statistic += d * d / expected;
  }
  r.dof = cells > 0 ? cells - 1 : 0;
  r.p_value = std::isinf(r.statistic) ? 0.0 : chi_square_survival(r.statistic, r.dof);
  return r;
}

ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> counts) {
  const std::vector<double> p(counts.size(), 1.0 / static_cast<double>(counts.size()));
  return chi_square_gof(counts, p);
}

ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a,
                                      std::span<const std::uint64_t> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kInvalidArgument, "chi-square: size mismatch");
  const double na = static_cast<double>(std::accumulate(a.begin(), a.end(), 0ULL));
  const double nb = static_cast<double>(std::accumulate(b.begin(), b.end(), 0ULL));
  const double n = na + nb;
  ChiSquareResult r;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double col = static_cast<double>(a[i] + b[i]);
    if (col == 0) continue;
    ++cells;
    const double ea = col * na / n;
    const double eb = col * nb / n;
    r.statistic += (a[i] - ea) * (a[i] - ea) / ea + (b[i] - eb) * (b[i] - eb) / eb;
  }
  r.dof = cells > 0 ? cells - 1 : 0;
  r.p_value = chi_square_survival(r.statistic, r.dof);
  return r;
}

double binomial_standard_error(double p, std::size_t n) {
  return std::sqrt(p * (1 - p) / static_cast<double>(n));
}

double empirical_tv(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  const double na = static_cast<double>(std::accumulate(a.begin(), a.end(), 0ULL));
  const double nb = static_cast<double>(std::accumulate(b.begin(), b.end(), 0ULL));
  double l1 = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    l1 += std::abs(static_cast<double>(a[i]) / na - static_cast<double>(b[i]) / nb);
  }
  return l1 / 2;
}

double l1_deviation_bound(std::size_t cells, std::size_t n, double delta) {
  return std::sqrt(2.0 / static_cast<double>(n) *
                   (static_cast<double>(cells) * std::log(2.0) + std::log(1.0 / delta)));
}

}  // namespace permzk
