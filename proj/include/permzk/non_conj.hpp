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
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permzk/group_conj.hpp"
#include "permzk/instance.hpp"
#include "permzk/protocol.hpp"

namespace permzk {

// Shared, precomputed data for the honest-verifier non-conjugacy protocol:
// the verifier picks a secret side alpha and mask u, and sends k iid uniform
// elements of <A_alpha^u>; the prover must name alpha.
class NonConjContext {
 public:
  // k = 0 selects the default 8m. Throws Error(kBudgetExceeded) when
  // |<U>| exceeds cap, since the prover works by enumeration.
  NonConjContext(GroupConjInstance instance, std::size_t k = 0,
                 std::uint64_t prover_cap = kDefaultProverCap);

  const GroupConjInstance& instance() const noexcept { return instance_; }
  std::size_t degree() const noexcept { return instance_.degree; }
  std::size_t k() const noexcept { return k_; }
  const StabilizerChain& mask_group() const noexcept { return mask_; }
  const StabilizerChain& side_group(int side) const { return side ? side1_ : side0_; }

  // For each v in <U> (enumeration order): does <tuple> equal <A_side^v>?
  std::vector<bool> matches(std::span<const Permutation> tuple, int side) const;

 private:
  GroupConjInstance instance_;
  std::size_t k_;
  StabilizerChain mask_;
  StabilizerChain side0_;
  StabilizerChain side1_;
  std::vector<std::vector<StabilizerChain>> conjugates_;  // [side][v]
};

struct NonConjChallenge {
  int alpha = 0;
  Permutation u = Permutation::identity(1);
  std::vector<Permutation> tuple;
};

NonConjChallenge nc_verifier_round1(const NonConjContext& context, RandomTape& rng);

// beta with <tuple> conjugate to <A_beta> within <U>; 0 when both or
// neither side matches.
int nc_prover_round2(const NonConjContext& context, std::span<const Permutation> tuple);

// Accept iff the answer is exactly the byte string of alpha.
bool nc_verdict(int alpha, std::string_view beta) noexcept;

// Verifier challenge, prover answer.
RoundSchedule challenge_answer_schedule();

class NonConjVerifier final : public VerifierStrategy {
 public:
  explicit NonConjVerifier(std::shared_ptr<const NonConjContext> context);
  std::optional<Payload> next_message(std::span<const Message> history, RandomTape& tape) override;
  bool decide(std::span<const Message> history, RandomTape& tape) override;
  int alpha() const noexcept { return alpha_; }

 private:
  std::shared_ptr<const NonConjContext> context_;
  int alpha_ = 0;
};

enum class NonConjProverKind {
  kBruteForce,  // the honest, unbounded prover
  kAlways0,
  kAlways1,
  kMajority,  // the side matched by more conjugates over <U>; ties go to 0
};

class NonConjProver final : public ProverStrategy {
 public:
  NonConjProver(std::shared_ptr<const NonConjContext> context, NonConjProverKind kind);
  Payload next_message(std::span<const Message> history, RandomTape& tape) override;

 private:
  std::shared_ptr<const NonConjContext> context_;
  NonConjProverKind kind_;
};

}  // namespace permzk
