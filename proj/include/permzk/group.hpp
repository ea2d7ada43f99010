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
#include <string>
#include <string_view>
#include <vector>

#include "permzk/permutation.hpp"
#include "permzk/random_tape.hpp"

namespace permzk {

// Generators of a subgroup of S_m. An empty list is the trivial group.
class GeneratingSet {
 public:
  explicit GeneratingSet(std::size_t degree, std::vector<Permutation> generators = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool empty() const noexcept { return generators_.empty(); }

  // Sorted, duplicate-free, identity-free copy.
  GeneratingSet canonical() const;

  friend bool operator==(const GeneratingSet&, const GeneratingSet&) = default;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
};

// ';'-separated one-line permutations; the trivial group is the empty string.
std::string format_generating_set(const GeneratingSet& set);
GeneratingSet parse_generating_set(std::size_t degree, std::string_view text);

// Base and strong generating set with explicit transversals, built by
// deterministic Schreier-Sims. Immutable once constructed.
class StabilizerChain {
 public:
  explicit StabilizerChain(const GeneratingSet& generators);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  // 1-based base points.
  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;
  const GeneratingSet& generators() const noexcept { return generators_; }
  std::size_t orbit_size(std::size_t level) const { return levels_.at(level).orbit.size(); }

  // Throws Error(kOverflow) if the order does not fit in 64 bits.
  std::uint64_t order() const;

  bool contains(const Permutation& y) const;

  // Strips y through the levels starting at `from_level`. Returns the residue
  // and sets *stopped_at to the level where stripping failed, or depth().
  Permutation sift(const Permutation& y, std::size_t from_level = 0,
                   std::size_t* stopped_at = nullptr) const;

  // Exactly uniform: one uniform coset representative per level.
  Permutation random_element(RandomTape& rng) const;

  // All elements, sorted, identity first. Throws Error(kBudgetExceeded) if
  // the order exceeds cap.
  std::vector<Permutation> elements(std::uint64_t cap) const;

 private:
  struct Level {
    Point base = 0;  // 0-based
    std::vector<Permutation> generators;
    std::vector<Point> orbit;              // BFS order
    std::vector<std::int32_t> rep_index;   // point -> index into reps, or -1
    std::vector<Permutation> reps;         // reps[j] maps base to orbit[j]
  };

  void rebuild_orbit(Level& level) const;
  const Permutation* representative(const Level& level, Point point) const;
  void schreier_sims();

  std::size_t degree_;
  GeneratingSet generators_;
  std::vector<Level> levels_;
};

// Every generator of X lies in <Y> and vice versa.
bool group_equal(const StabilizerChain& x, const StabilizerChain& y);
bool group_equal(const GeneratingSet& x, const GeneratingSet& y);

// Y^v = { y^v : y in Y }.
GeneratingSet conjugate_set(const GeneratingSet& set, const Permutation& v);

// <tuple> equals the group of `target`.
bool generates(std::span<const Permutation> tuple, const StabilizerChain& target);

struct GeneratingTuple {
  std::vector<Permutation> tuple;
  GeneratingSet target;
  std::size_t attempts = 0;
};

inline constexpr std::size_t kDefaultTupleAttempts = 64;

// Uniform on the k-tuples over <target> that generate <target>, by rejection
// from k iid uniform elements. Throws Error(kSamplingFailed) after
// max_attempts rejected draws.
GeneratingTuple random_generating_tuple(const StabilizerChain& target, std::size_t k,
                                        RandomTape& rng,
                                        std::size_t max_attempts = kDefaultTupleAttempts);

std::vector<Permutation> enumerate_elements(const StabilizerChain& chain, std::uint64_t cap);

// All k-tuples over <target> generating it, lexicographic in element order.
// Throws Error(kBudgetExceeded) when order^k exceeds cap.
std::vector<std::vector<Permutation>> enumerate_generating_tuples(const StabilizerChain& target,
                                                                  std::size_t k,
                                                                  std::uint64_t cap);

// Generators of C(x) = { z in S_m : zx = xz }: one cycle per cycle of x and
// swaps of adjacent equal-length cycles.
GeneratingSet centralizer_in_sym(const Permutation& x);

// prod_d count_d! * d^count_d over the cycle lengths d of x.
std::uint64_t centralizer_order(const Permutation& x);

}  // namespace permzk
