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

#include "permzk/non_conj.hpp"

#include <algorithm>

#include "permzk/error.hpp"

namespace permzk {

NonConjContext::NonConjContext(GroupConjInstance instance, std::size_t k,
                               std::uint64_t prover_cap)
    : instance_(std::move(instance)),
      k_(k == 0 ? 8 * instance_.degree : k),
      mask_(instance_.u),
      side0_(instance_.a0),
      side1_(instance_.a1) {
  const auto masks = mask_.elements(prover_cap);
  conjugates_.resize(2);
  for (int side = 0; side < 2; ++side) {
    const GeneratingSet& a = side ? instance_.a1 : instance_.a0;
    for (const auto& v : masks) conjugates_[side].emplace_back(conjugate_set(a, v));
  }
}

std::vector<bool> NonConjContext::matches(std::span<const Permutation> tuple, int side) const {
  const StabilizerChain sub(GeneratingSet(degree(), {tuple.begin(), tuple.end()}));
  std::vector<bool> out;
  out.reserve(conjugates_[side].size());
  for (const auto& target : conjugates_[side]) out.push_back(group_equal(sub, target));
  return out;
}

NonConjChallenge nc_verifier_round1(const NonConjContext& context, RandomTape& rng) {
  NonConjChallenge c;
  c.alpha = rng.bit() ? 1 : 0;
  c.u = context.mask_group().random_element(rng);
  const StabilizerChain& side = context.side_group(c.alpha);
  c.tuple.reserve(context.k());
  for (std::size_t i = 0; i < context.k(); ++i) {
    c.tuple.push_back(conjugate(side.random_element(rng), c.u));
  }
  return c;
}

namespace {

bool any(const std::vector<bool>& v) { return std::find(v.begin(), v.end(), true) != v.end(); }

}  // namespace

int nc_prover_round2(const NonConjContext& context, std::span<const Permutation> tuple) {
  const bool m0 = any(context.matches(tuple, 0));
  const bool m1 = any(context.matches(tuple, 1));
  return (m1 && !m0) ? 1 : 0;
}

bool nc_verdict(int alpha, std::string_view beta) noexcept { return beta == bit_string(alpha); }

RoundSchedule challenge_answer_schedule() { return {{Sender::kVerifier, Sender::kProver}}; }

NonConjVerifier::NonConjVerifier(std::shared_ptr<const NonConjContext> context)
    : context_(std::move(context)) {}

std::optional<Payload> NonConjVerifier::next_message(std::span<const Message>, RandomTape& tape) {
  auto challenge = nc_verifier_round1(*context_, tape);
  alpha_ = challenge.alpha;
  return tuple_payload(challenge.tuple);
}

bool NonConjVerifier::decide(std::span<const Message> history, RandomTape&) {
  if (history.size() != 2) return false;
  const auto beta = as_bits(history[1].payload);
  return beta && nc_verdict(alpha_, *beta);
}

NonConjProver::NonConjProver(std::shared_ptr<const NonConjContext> context,
                             NonConjProverKind kind)
    : context_(std::move(context)), kind_(kind) {}

Payload NonConjProver::next_message(std::span<const Message> history, RandomTape&) {
  switch (kind_) {
    case NonConjProverKind::kAlways0: return bits_payload("0");
    case NonConjProverKind::kAlways1: return bits_payload("1");
    default: break;
  }
  // A malformed challenge cannot be answered meaningfully; say 0.
  if (history.empty()) return bits_payload("0");
  const auto tuple = as_tuple(history.front().payload, context_->degree(), context_->k());
  if (!tuple) return bits_payload("0");
  if (kind_ == NonConjProverKind::kBruteForce) {
    return bits_payload(bit_string(nc_prover_round2(*context_, *tuple)));
  }
  const auto m0 = context_->matches(*tuple, 0);
  const auto m1 = context_->matches(*tuple, 1);
  const auto c0 = std::count(m0.begin(), m0.end(), true);
  const auto c1 = std::count(m1.begin(), m1.end(), true);
  return bits_payload(c1 > c0 ? "1" : "0");
}

}  // namespace permzk
