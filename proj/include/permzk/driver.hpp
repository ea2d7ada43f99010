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
#include <string>
#include <string_view>

#include "permzk/group_conj.hpp"
#include "permzk/instance.hpp"

// Whole-command entry points shared by the C API and the CLI. Each returns
// the text it would print plus an exit code (0 accept/yes/pass, 1
// reject/no/fail); usage and budget problems are thrown as Error.
namespace permzk::driver {

enum class ProtocolFamily { kGroupConj, kNonConj, kElemConj };
ProtocolFamily parse_protocol_family(std::string_view name);
std::string_view protocol_family_name(ProtocolFamily family);

enum class Composition { kDefault, kSequential, kParallel };
Composition parse_composition(std::string_view name);

struct CommandResult {
  int exit_code = 0;
  std::string report;
  std::string transcript;
};

CommandResult decide(const InstanceFile& file, std::uint64_t cap = kDefaultProverCap);

struct ProveConfig {
  ProtocolFamily protocol = ProtocolFamily::kGroupConj;
  Composition composition = Composition::kDefault;
  std::size_t rounds = 0;  // 0: input bit length (parallel non-conj: 2)
  std::size_t k = 0;       // 0: 4m, or 8m for non-conj
  std::uint64_t seed = 1;
  std::string prover = "honest";
  std::string verifier = "honest";
  std::size_t trials = 1;  // > 1 reports an acceptance rate instead of a transcript
  std::uint64_t cap = kDefaultProverCap;
};

CommandResult prove(const InstanceFile& file, const ProveConfig& config);

struct SimulateConfig {
  std::uint64_t seed = 1;
  std::string verifier = "honest";
  bool exact = false;
  std::size_t samples = 1000;
  std::size_t k = 0;
  std::uint64_t cap = kDefaultProverCap;
};

CommandResult simulate(const InstanceFile& file, const SimulateConfig& config);

struct GenLemmaConfig {
  std::size_t k = 0;  // 0: 4m
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
};

CommandResult genlemma(const InstanceFile& file, const GenLemmaConfig& config);

}  // namespace permzk::driver
