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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace permzk {

struct ChiSquareResult {
  double statistic = 0;
  std::size_t dof = 0;
  double p_value = 1;
};

// Goodness of fit of counts against cell probabilities (summing to one).
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> counts,
                               std::span<const double> probabilities);
ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> counts);

// Homogeneity of two samples over the same cells; empty columns are dropped.
ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a,
                                      std::span<const std::uint64_t> b);

// Upper tail of the chi-square distribution.
double chi_square_survival(double statistic, std::size_t dof);

double binomial_standard_error(double p, std::size_t n);

// Half the L1 distance between the two empirical distributions.
double empirical_tv(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

// epsilon with P(||p_hat - p||_1 >= epsilon) <= delta for n samples over
// `cells` cells (Weissman et al. L1 deviation inequality).
double l1_deviation_bound(std::size_t cells, std::size_t n, double delta);

}  // namespace permzk
