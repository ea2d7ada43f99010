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

#include <gtest/gtest.h>

#include <cmath>

#include "permzk/error.hpp"
#include "permzk/random_tape.hpp"
#include "permzk/stats.hpp"

namespace permzk {
namespace {

// Reference values computed independently with scipy.stats.

TEST(ChiSquare, SurvivalFunction) {
  EXPECT_NEAR(chi_square_survival(3.84, 1), 0.05004352124870519, 1e-12);
  EXPECT_NEAR(chi_square_survival(30.0, 23), 0.149401647696323, 1e-12);
  EXPECT_NEAR(chi_square_survival(10, 10), 0.44049328506521257, 1e-12);
  EXPECT_EQ(chi_square_survival(0, 3), 1.0);
}

TEST(ChiSquare, UniformGoodnessOfFit) {
  const std::uint64_t counts[] = {10, 20, 30};
  const auto r = chi_square_uniform(counts);
  EXPECT_NEAR(r.statistic, 10.0, 1e-12);
  EXPECT_EQ(r.dof, 2u);
  EXPECT_NEAR(r.p_value, 0.006737946999085468, 1e-12);
  const std::uint64_t near[] = {5, 9, 6};
  EXPECT_NEAR(chi_square_uniform(near).p_value, 0.5220457767610162, 1e-12);
}

TEST(ChiSquare, GoodnessOfFitWithLaw) {
  const std::uint64_t counts[] = {30, 50, 20};
  const double law[] = {0.25, 0.5, 0.25};
  const auto r = chi_square_gof(counts, law);
  EXPECT_NEAR(r.statistic, 2.0, 1e-12);
  EXPECT_NEAR(r.p_value, 0.36787944117144245, 1e-12);
}

TEST(ChiSquare, TwoSampleHomogeneity) {
  const std::uint64_t a[] = {10, 20, 30, 0};
  const std::uint64_t b[] = {15, 15, 30, 0};
  const auto r = chi_square_two_sample(a, b);
  EXPECT_NEAR(r.statistic, 1.7142857142857144, 1e-12);
  EXPECT_EQ(r.dof, 2u);  // the empty column is dropped
  EXPECT_NEAR(r.p_value, 0.42437284567695, 1e-12);
}

TEST(ChiSquare, MismatchedInputsRejected) {
  const std::uint64_t a[] = {1, 2};
  const std::uint64_t b[] = {1, 2, 3};
  EXPECT_THROW(chi_square_two_sample(a, b), Error);
  const double law[] = {1.0};
  EXPECT_THROW(chi_square_gof(a, law), Error);
}

TEST(ChiSquare, NullPValuesRoughlyUniform) {
  // Under the null, p < 0.05 about 5% of the time.
  RandomTape rng(3);
  int small = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::uint64_t counts[6] = {};
    for (int i = 0; i < 600; ++i) ++counts[rng.uniform_below(6)];
    small += chi_square_uniform(counts).p_value < 0.05;
  }
  EXPECT_NEAR(small / 1000.0, 0.05, 0.025);
}

TEST(Distances, EmpiricalTv) {
  const std::uint64_t a[] = {5, 5, 0};
  const std::uint64_t b[] = {0, 5, 5};
  EXPECT_NEAR(empirical_tv(a, b), 0.5, 1e-12);
  EXPECT_NEAR(empirical_tv(a, a), 0.0, 1e-12);
}

TEST(Distances, DeviationBoundShrinksWithSamples) {
  const double b1 = l1_deviation_bound(16, 1000, 1e-3);
  const double b2 = l1_deviation_bound(16, 4000, 1e-3);
  EXPECT_NEAR(b1 / b2, 2.0, 1e-9);
  EXPECT_NEAR(b1, std::sqrt(2.0 / 1000 * (16 * std::log(2.0) + std::log(1000.0))), 1e-12);
}

TEST(Distances, BinomialStandardError) {
  EXPECT_NEAR(binomial_standard_error(0.5, 2000), std::sqrt(0.25 / 2000), 1e-15);
  EXPECT_EQ(binomial_standard_error(0.0, 10), 0.0);
}

}  // namespace
}  // namespace permzk
