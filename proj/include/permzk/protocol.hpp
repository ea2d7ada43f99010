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
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "permzk/permutation.hpp"
#include "permzk/random_tape.hpp"

namespace permzk {

enum class Sender { kProver, kVerifier };

// Wire payloads are kept raw so that a cheating party can send anything;
// receivers vet them with as_tuple / as_permutation.
struct TuplePayload {
  std::vector<std::vector<Point>> perms;
  friend bool operator==(const TuplePayload&, const TuplePayload&) = default;
};
struct PermPayload {
  std::vector<Point> images;
  friend bool operator==(const PermPayload&, const PermPayload&) = default;
};
struct BitsPayload {
  std::string bytes;
  friend bool operator==(const BitsPayload&, const BitsPayload&) = default;
};
using Payload = std::variant<TuplePayload, BitsPayload, PermPayload>;

Payload tuple_payload(std::span<const Permutation> tuple);
Payload perm_payload(const Permutation& p);
Payload bits_payload(std::string bytes);

// Exactly `length` valid permutations of `degree`, otherwise nullopt.
std::optional<std::vector<Permutation>> as_tuple(const Payload& payload, std::size_t degree,
                                                 std::size_t length);
std::optional<Permutation> as_permutation(const Payload& payload, std::size_t degree);
// Challenge bytes; nullopt if the payload is not a bit string.
std::optional<std::string> as_bits(const Payload& payload);

// Tuples as "p;p;...", permutations in one-line form, bit strings verbatim
// with bytes outside '0'/'1' escaped as \xHH. An empty tuple prints as "-".
std::string format_payload(const Payload& payload);

struct Message {
  Sender sender;
  Payload payload;
  friend bool operator==(const Message&, const Message&) = default;
};

// The verifier's random string as read so far: the seed plus draw count.
struct TapePrefix {
  std::uint64_t seed = 0;
  std::uint64_t consumed = 0;
  friend auto operator<=>(const TapePrefix&, const TapePrefix&) = default;
};

struct View {
  TapePrefix verifier_tape;
  std::vector<Message> messages;
  friend bool operator==(const View&, const View&) = default;
};

struct SessionOutcome {
  bool accepted = false;
  // Set when the verifier halted early on a malformed message.
  bool aborted = false;
  View view;
  std::vector<std::uint64_t> round_nanos;
};

class ProverStrategy {
 public:
  virtual ~ProverStrategy() = default;
  virtual Payload next_message(std::span<const Message> history, RandomTape& tape) = 0;
};

class VerifierStrategy {
 public:
  virtual ~VerifierStrategy() = default;
  // nullopt halts the session with a rejection.
  virtual std::optional<Payload> next_message(std::span<const Message> history,
                                              RandomTape& tape) = 0;
  virtual bool decide(std::span<const Message> history, RandomTape& tape) = 0;
};

// Who speaks in each round; the verifier decides after the last one.
struct RoundSchedule {
  std::vector<Sender> speakers;
};

SessionOutcome run_session(const RoundSchedule& schedule, ProverStrategy& prover,
                           VerifierStrategy& verifier, RandomTape& prover_tape,
                           RandomTape& verifier_tape);

struct StrategyPair {
  std::unique_ptr<ProverStrategy> prover;
  std::unique_ptr<VerifierStrategy> verifier;
};
using StrategyFactory = std::function<StrategyPair()>;

struct CompositeOutcome {
  bool accepted = false;
  bool lockstep = false;
  std::size_t accepted_sessions = 0;
  std::vector<SessionOutcome> sessions;
};

// t independent sessions one after another, each with fresh tapes forked
// from rng; accepts iff all accept.
CompositeOutcome run_sequential(const RoundSchedule& schedule, const StrategyFactory& factory,
                                std::size_t t, RandomTape& rng);

// t sessions advanced in lockstep, one bundled message per round.
CompositeOutcome run_parallel(const RoundSchedule& schedule, const StrategyFactory& factory,
                              std::size_t t, RandomTape& rng);

// "s<session>.r<round> <P|V> <payload>" lines (1-based), then the verdict.
std::string format_transcript(const CompositeOutcome& outcome);

// Re-runs `verifier` on the recorded tape and prover messages. Returns the
// verdict, or nullopt if the verifier's messages or tape usage diverge from
// the recorded view.
std::optional<bool> replay_verdict(const RoundSchedule& schedule, VerifierStrategy& verifier,
                                   const View& view);

}  // namespace permzk
