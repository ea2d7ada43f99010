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

#include <cstdint>
#include <limits>
#include <random>

namespace permzk {

// A party's random string, realised as a seeded deterministic stream. The
// pair (seed, consumed) identifies exactly the prefix read so far.
class RandomTape {
 public:
  using result_type = std::uint64_t;

  explicit RandomTape(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    ++consumed_;
    return engine_();
  }

  // Uniform on [0, bound); bound must be positive. Rejection keeps it exact.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = (*this)();
      if (x >= threshold) return x % bound;
    }
  }

  bool bit() { return ((*this)() >> 63) != 0; }

  // Seed for an independent child tape (sessions, samples, ...).
  std::uint64_t fork_seed() { return (*this)(); }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t consumed() const noexcept { return consumed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t consumed_ = 0;
  std::mt19937_64 engine_;
};

}  // namespace permzk
