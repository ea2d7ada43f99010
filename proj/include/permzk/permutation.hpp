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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permzk {

using Point = std::uint32_t;

// A bijection of {1..m}. Points are 1-based at the API boundary and 0-based
// in storage. Products follow one convention everywhere: compose(a, b) means
// "apply a, then b", so the written product a*b is compose(a, b).
class Permutation {
 public:
  static Permutation identity(std::size_t degree);

  // One-line notation with 1-based images. Throws Error(kParse) if the
  // sequence is not a bijection of {1..m}.
  static Permutation from_images(std::span<const Point> images);
  static Permutation from_images(std::initializer_list<Point> images);

  // Returns nullopt instead of throwing; used to vet untrusted messages.
  static std::optional<Permutation> try_from_images(std::span<const Point> images);

  // Builds a permutation from disjoint cycles written with 1-based points,
  // e.g. from_cycles(6, {{1, 4}, {2, 6}, {3, 5}}).
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }

  // 1-based image of a 1-based point.
  Point image(Point point) const { return images_.at(point - 1) + 1; }
  // 0-based access for the hot loops in the group engine.
  Point operator[](std::size_t index) const noexcept { return images_[index]; }

  bool is_identity() const noexcept;
  // Smallest moved point (1-based), or 0 for the identity.
  Point first_moved_point() const noexcept;

  std::vector<Point> one_line() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> zero_based) : images_(std::move(zero_based)) {}

  friend Permutation compose(const Permutation& a, const Permutation& b);
  friend Permutation inverse(const Permutation& a);
  friend Permutation conjugate(const Permutation& y, const Permutation& v);

  std::vector<Point> images_;
};

// i -> b(a(i)). Throws Error(kDegreeMismatch).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
// y^v = v^-1 y v, i.e. the map v(i) -> v(y(i)).
Permutation conjugate(const Permutation& y, const Permutation& v);

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

// Sorted multiset of cycle lengths, fixed points included.
using CycleType = std::vector<std::size_t>;

CycleType cycle_type(const Permutation& a);

// Disjoint cycles (1-based), each starting at its smallest point, ordered by
// (length, smallest point). Fixed points appear as 1-cycles.
std::vector<std::vector<Point>> cycles(const Permutation& a);

// Some s with conjugate(a0, s) == a1, or nullopt if the cycle types differ.
// Cycles of both permutations are aligned in (length, smallest point) order.
std::optional<Permutation> conjugator_in_sym(const Permutation& a0, const Permutation& a1);

// "i1 i2 ... im", single spaces.
std::string format_perm(const Permutation& a);
Permutation parse_perm(std::string_view text);
// Tokenizes one-line text without checking bijectivity.
std::vector<Point> parse_images(std::string_view text);

// Cycle notation for diagnostics only, e.g. "(1 2 3)(4 5)"; identity is "()".
std::string cycle_string(const Permutation& a);

std::uint64_t hash_value(const Permutation& a) noexcept;

struct PermutationHash {
  std::size_t operator()(const Permutation& a) const noexcept {
    return static_cast<std::size_t>(hash_value(a));
  }
};

}  // namespace permzk
