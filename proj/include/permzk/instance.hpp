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
#include <optional>
#include <string>
#include <string_view>

#include "permzk/group.hpp"
#include "permzk/permutation.hpp"

namespace permzk {

// Is <A1> = <A0>^v for some v in <U>?
struct GroupConjInstance {
  std::size_t degree = 0;
  GeneratingSet a0{1};
  GeneratingSet a1{1};
  GeneratingSet u{1};
  std::optional<Permutation> witness;
};

// Is a1 = a0^v for some v in <U>?
struct ElemConjInstance {
  std::size_t degree = 0;
  Permutation a0 = Permutation::identity(1);
  Permutation a1 = Permutation::identity(1);
  GeneratingSet u{1};
  std::optional<Permutation> witness;
};

// Does C(x) meet the coset <U>y?
struct CciInstance {
  Permutation x = Permutation::identity(1);
  Permutation y = Permutation::identity(1);
  GeneratingSet u{1};
};

// Witness check: v in <U> and <A1> = <A0>^v.
bool certifies(const GroupConjInstance& instance, const Permutation& v);
bool certifies(const ElemConjInstance& instance, const Permutation& v);

enum class InstanceKind { kGroup, kElement, kSingleGroup };

// Parsed instance file. Line format:
//   degree: m
//   A0: p;p;...   A1: ...   U: ...   witness: p     (group conjugacy)
//   a0: p   a1: p   U: ...   witness: p             (element conjugacy)
//   A: p;p;...                                      (a lone group)
// '#' starts a comment; blank lines are ignored.
struct InstanceFile {
  InstanceKind kind = InstanceKind::kGroup;
  std::optional<GroupConjInstance> group;
  std::optional<ElemConjInstance> element;
  std::optional<GeneratingSet> single;
};

// Throws Error(kParse) with a line-numbered diagnostic.
InstanceFile parse_instance(std::string_view text);
InstanceFile load_instance(const std::string& path);

// Canonical serialization; parse_instance(format_instance(x)) == x.
std::string format_instance(const GroupConjInstance& instance);
std::string format_instance(const ElemConjInstance& instance);

// Bit length of the canonical serialization: the default repetition count.
std::size_t input_bit_length(const GroupConjInstance& instance);
std::size_t input_bit_length(const ElemConjInstance& instance);

}  // namespace permzk
