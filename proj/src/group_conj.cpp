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

#include "permzk/group_conj.hpp"

#include "permzk/error.hpp"

namespace permzk {

GroupStatement::GroupStatement(GroupConjInstance instance, std::size_t k)
    : instance_(std::move(instance)),
      k_(k == 0 ? 4 * instance_.degree : k),
      mask_(instance_.u) {
  if (instance_.a0.degree() != instance_.degree || instance_.a1.degree() != instance_.degree ||
      instance_.u.degree() != instance_.degree) {
    throw Error(ErrorCode::kDegreeMismatch, "instance sets disagree on the degree");
  }
}

std::vector<Permutation> GroupStatement::commit(int side, const Permutation& w, RandomTape& rng,
                                                std::size_t* attempts) const {
  const StabilizerChain target(conjugate_set(side_set(side), w));
  auto sample = random_generating_tuple(target, k_, rng);
  if (attempts) *attempts += sample.attempts;
  return std::move(sample.tuple);
}

bool GroupStatement::opens_to(std::span<const Permutation> commitment, int side,
                              const Permutation& w) const {
  if (commitment.size() != k_) return false;
  return generates(commitment, StabilizerChain(conjugate_set(side_set(side), w)));
}

std::vector<std::vector<Permutation>> GroupStatement::enumerate_commitments(
    int side, const Permutation& w, std::uint64_t cap) const {
  return enumerate_generating_tuples(StabilizerChain(conjugate_set(side_set(side), w)), k_, cap);
}

std::optional<Permutation> find_group_conjugator(const GeneratingSet& a0, const GeneratingSet& a1,
                                                 const GeneratingSet& u, std::uint64_t cap) {
  const StabilizerChain target(a1);
  for (const auto& v : StabilizerChain(u).elements(cap)) {
    if (group_equal(target, StabilizerChain(conjugate_set(a0, v)))) return v;
  }
  return std::nullopt;
}

GroupConjInstance with_witness(GroupConjInstance instance, std::uint64_t cap) {
  if (!instance.witness) {
    instance.witness = find_group_conjugator(instance.a0, instance.a1, instance.u, cap);
  }
  return instance;
}

int challenge_delta(std::string_view beta) noexcept { return beta == "1" ? 1 : 0; }

std::string bit_string(int bit) { return bit ? "1" : "0"; }

ProverCommitState prover_round1(const ConjugacyStatement& statement, RandomTape& rng) {
  ProverCommitState state{statement.mask_group().random_element(rng), {}, 0};
  state.commitment = statement.commit(1, state.u, rng, &state.attempts);
  return state;
}

std::optional<std::vector<Permutation>> verifier_round1_check(const ConjugacyStatement& statement,
                                                              const Payload& message) {
  return as_tuple(message, statement.degree(), statement.commitment_length());
}

std::string verifier_round2(RandomTape& rng) { return bit_string(rng.bit()); }

Permutation prover_round3(const ProverCommitState& state, const ConjugacyStatement& statement,
                          std::string_view beta) {
  if (challenge_delta(beta) == 1) return state.u;
  const auto& v = statement.witness();
  if (!v) throw Error(ErrorCode::kPrecondition, "honest prover has no witness");
  return compose(*v, state.u);
}

bool verifier_round3_check(const ConjugacyStatement& statement,
                           std::span<const Permutation> commitment, std::string_view beta,
                           const Permutation& w) {
  if (w.degree() != statement.degree()) return false;
  if (!statement.mask_group().contains(w)) return false;
  return statement.opens_to(commitment, challenge_delta(beta), w);
}

RoundSchedule commit_challenge_response_schedule() {
  return {{Sender::kProver, Sender::kVerifier, Sender::kProver}};
}

namespace {

std::string challenge_in(std::span<const Message> history) {
  if (history.size() < 2) return {};
  return as_bits(history[1].payload).value_or(std::string());
}

}  // namespace

HonestProver::HonestProver(std::shared_ptr<const ConjugacyStatement> statement)
    : statement_(std::move(statement)) {}

Payload HonestProver::next_message(std::span<const Message> history, RandomTape& tape) {
  if (history.empty()) {
    if (!statement_->witness()) {
      throw Error(ErrorCode::kPrecondition, "honest prover needs a yes-instance witness");
    }
    state_ = prover_round1(*statement_, tape);
    return tuple_payload(state_->commitment);
  }
  return perm_payload(prover_round3(*state_, *statement_, challenge_in(history)));
}

GuessingProver::GuessingProver(std::shared_ptr<const ConjugacyStatement> statement)
    : statement_(std::move(statement)) {}

Payload GuessingProver::next_message(std::span<const Message> history, RandomTape& tape) {
  if (history.empty()) {
    guess_ = tape.bit() ? 1 : 0;
    mask_ = statement_->mask_group().random_element(tape);
    return tuple_payload(statement_->commit(guess_, *mask_, tape));
  }
  return perm_payload(*mask_);
}

MalformedProver::MalformedProver(std::shared_ptr<const ConjugacyStatement> statement)
    : statement_(std::move(statement)) {}

Payload MalformedProver::next_message(std::span<const Message> history, RandomTape&) {
  const std::size_t m = statement_->degree();
  if (history.empty()) {
    TuplePayload bad;
    for (std::size_t i = 0; i < statement_->commitment_length(); ++i) {
      bad.perms.push_back(Permutation::identity(m).one_line());
    }
    bad.perms.front().assign(m, 1);
    return bad;
  }
  return PermPayload{std::vector<Point>(m, 1)};
}

HonestVerifier::HonestVerifier(std::shared_ptr<const ConjugacyStatement> statement)
    : statement_(std::move(statement)) {}

std::string HonestVerifier::challenge(std::span<const Permutation>, RandomTape& tape) {
  return verifier_round2(tape);
}

std::optional<Payload> HonestVerifier::next_message(std::span<const Message> history,
                                                    RandomTape& tape) {
  auto commitment = verifier_round1_check(*statement_, history.back().payload);
  if (!commitment) return std::nullopt;
  return bits_payload(challenge(*commitment, tape));
}

bool HonestVerifier::decide(std::span<const Message> history, RandomTape&) {
  if (history.size() != 3) return false;
  auto commitment = verifier_round1_check(*statement_, history[0].payload);
  auto w = as_permutation(history[2].payload, statement_->degree());
  if (!commitment || !w) return false;
  return verifier_round3_check(*statement_, *commitment, challenge_in(history), *w);
}

}  // namespace permzk
