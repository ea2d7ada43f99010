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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permzk/group.hpp"
#include "permzk/instance.hpp"
#include "permzk/protocol.hpp"

namespace permzk {

inline constexpr std::uint64_t kDefaultProverCap = 1'000'000;

// The statement-specific half of the three-round conjugacy protocol. Side
// 0/1 selects A0/A1 (or a0/a1); a commitment "opens to side^w" when it is
// a generating tuple of <A_side^w> (resp. equals a_side^w).
class ConjugacyStatement {
 public:
  virtual ~ConjugacyStatement() = default;

  virtual std::size_t degree() const = 0;
  virtual std::size_t commitment_length() const = 0;
  virtual const StabilizerChain& mask_group() const = 0;
  // v in <U> taking side 0 to side 1, when known.
  virtual const std::optional<Permutation>& witness() const = 0;

  // Uniform over the commitments opening to side^w. Adds the number of
  // tuple-sampling attempts to *attempts when non-null.
  virtual std::vector<Permutation> commit(int side, const Permutation& w, RandomTape& rng,
                                          std::size_t* attempts = nullptr) const = 0;
  virtual bool opens_to(std::span<const Permutation> commitment, int side,
                        const Permutation& w) const = 0;
  // Every commitment opening to side^w, by direct enumeration.
  virtual std::vector<std::vector<Permutation>> enumerate_commitments(
      int side, const Permutation& w, std::uint64_t cap) const = 0;
};

// Group conjugacy: commitments are k-tuples generating <A_side^w>.
class GroupStatement final : public ConjugacyStatement {
 public:
  // k = 0 selects the default 4m.
  explicit GroupStatement(GroupConjInstance instance, std::size_t k = 0);

  const GroupConjInstance& instance() const noexcept { return instance_; }

  std::size_t degree() const override { return instance_.degree; }
  std::size_t commitment_length() const override { return k_; }
  const StabilizerChain& mask_group() const override { return mask_; }
  const std::optional<Permutation>& witness() const override { return instance_.witness; }

  std::vector<Permutation> commit(int side, const Permutation& w, RandomTape& rng,
                                  std::size_t* attempts = nullptr) const override;
  bool opens_to(std::span<const Permutation> commitment, int side,
                const Permutation& w) const override;
  std::vector<std::vector<Permutation>> enumerate_commitments(int side, const Permutation& w,
                                                              std::uint64_t cap) const override;

 private:
  const GeneratingSet& side_set(int side) const { return side ? instance_.a1 : instance_.a0; }

  GroupConjInstance instance_;
  std::size_t k_;
  StabilizerChain mask_;
};

struct ProtocolParams {
  std::size_t k = 0;  // tuple length; 0 means 4m
  std::size_t t = 0;  // sequential repetitions; 0 means input bit length
};

// First v in enumeration order of <U> with <A1> = <A0>^v. Throws
// Error(kBudgetExceeded) if |<U>| > cap.
std::optional<Permutation> find_group_conjugator(const GeneratingSet& a0, const GeneratingSet& a1,
                                                 const GeneratingSet& u,
                                                 std::uint64_t cap = kDefaultProverCap);

// Fills in a missing witness by brute force. Leaves it empty on no-instances.
GroupConjInstance with_witness(GroupConjInstance instance, std::uint64_t cap = kDefaultProverCap);

// delta(beta): 1 iff the challenge is exactly the single byte "1".
int challenge_delta(std::string_view beta) noexcept;

std::string bit_string(int bit);

struct ProverCommitState {
  Permutation u;
  std::vector<Permutation> commitment;
  std::size_t attempts = 0;
};

// u uniform in <U>, commitment uniform among those opening to side 1 at u.
ProverCommitState prover_round1(const ConjugacyStatement& statement, RandomTape& rng);

// The vetted commitment, or nullopt if the message is not exactly
// commitment_length() permutations of the right degree.
std::optional<std::vector<Permutation>> verifier_round1_check(const ConjugacyStatement& statement,
                                                              const Payload& message);

// A fair challenge bit: one draw from the verifier tape.
std::string verifier_round2(RandomTape& rng);

// w = u when delta(beta) = 1, else v*u. Throws Error(kPrecondition) without
// a witness.
Permutation prover_round3(const ProverCommitState& state, const ConjugacyStatement& statement,
                          std::string_view beta);

// w in <U> and the commitment opens to side delta(beta) at w.
bool verifier_round3_check(const ConjugacyStatement& statement,
                           std::span<const Permutation> commitment, std::string_view beta,
                           const Permutation& w);

// Prover message, verifier challenge, prover response.
RoundSchedule commit_challenge_response_schedule();

class HonestProver final : public ProverStrategy {
 public:
  explicit HonestProver(std::shared_ptr<const ConjugacyStatement> statement);
  Payload next_message(std::span<const Message> history, RandomTape& tape) override;
  const std::optional<ProverCommitState>& state() const noexcept { return state_; }

 private:
  std::shared_ptr<const ConjugacyStatement> statement_;
  std::optional<ProverCommitState> state_;
};

// Commits to a uniformly guessed side and always answers w = u, which is
// correct exactly when delta(beta) matches the guess.
class GuessingProver final : public ProverStrategy {
 public:
  explicit GuessingProver(std::shared_ptr<const ConjugacyStatement> statement);
  Payload next_message(std::span<const Message> history, RandomTape& tape) override;
  int guess() const noexcept { return guess_; }

 private:
  std::shared_ptr<const ConjugacyStatement> statement_;
  int guess_ = 0;
  std::optional<Permutation> mask_;
};

// Sends a tuple whose first entry is not a bijection.
class MalformedProver final : public ProverStrategy {
 public:
  explicit MalformedProver(std::shared_ptr<const ConjugacyStatement> statement);
  Payload next_message(std::span<const Message> history, RandomTape& tape) override;

 private:
  std::shared_ptr<const ConjugacyStatement> statement_;
};

class HonestVerifier : public VerifierStrategy {
 public:
  explicit HonestVerifier(std::shared_ptr<const ConjugacyStatement> statement);
  std::optional<Payload> next_message(std::span<const Message> history, RandomTape& tape) override;
  bool decide(std::span<const Message> history, RandomTape& tape) override;

 protected:
  virtual std::string challenge(std::span<const Permutation> commitment, RandomTape& tape);

  std::shared_ptr<const ConjugacyStatement> statement_;
};

}  // namespace permzk
