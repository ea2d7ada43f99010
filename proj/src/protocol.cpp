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

#include "permzk/protocol.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "permzk/error.hpp"

namespace permzk {

Payload tuple_payload(std::span<const Permutation> tuple) {
  TuplePayload out;
  for (const auto& p : tuple) out.perms.push_back(p.one_line());
  return out;
}

Payload perm_payload(const Permutation& p) { return PermPayload{p.one_line()}; }

Payload bits_payload(std::string bytes) { return BitsPayload{std::move(bytes)}; }

std::optional<std::vector<Permutation>> as_tuple(const Payload& payload, std::size_t degree,
                                                 std::size_t length) {
  const auto* raw = std::get_if<TuplePayload>(&payload);
  if (raw == nullptr || raw->perms.size() != length) return std::nullopt;
  std::vector<Permutation> out;
  out.reserve(length);
  for (const auto& images : raw->perms) {
    if (images.size() != degree) return std::nullopt;
    auto p = Permutation::try_from_images(images);
    if (!p) return std::nullopt;
    out.push_back(*std::move(p));
  }
  return out;
}

std::optional<Permutation> as_permutation(const Payload& payload, std::size_t degree) {
  const auto* raw = std::get_if<PermPayload>(&payload);
  if (raw == nullptr || raw->images.size() != degree) return std::nullopt;
  return Permutation::try_from_images(raw->images);
}

std::optional<std::string> as_bits(const Payload& payload) {
  const auto* raw = std::get_if<BitsPayload>(&payload);
  if (raw == nullptr) return std::nullopt;
  return raw->bytes;
}

namespace {

std::string join_images(const std::vector<Point>& images) {
  std::string out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(images[i]);
  }
  return out;
}

}  // namespace

std::string format_payload(const Payload& payload) {
  if (const auto* t = std::get_if<TuplePayload>(&payload)) {
    if (t->perms.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < t->perms.size(); ++i) {
      if (i) out.push_back(';');
      out += join_images(t->perms[i]);
    }
    return out;
  }
  if (const auto* p = std::get_if<PermPayload>(&payload)) return join_images(p->images);
  const auto& bytes = std::get<BitsPayload>(payload).bytes;
  std::string out;
  for (unsigned char c : bytes) {
    if (c == '0' || c == '1') {
      out.push_back(static_cast<char>(c));
    } else {
      char buf[5];
      std::snprintf(buf, sizeof buf, "\\x%02X", c);
      out += buf;
    }
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t nanos_since(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

// One step of a session; returns false if the verifier halted.
bool step(Sender speaker, ProverStrategy& prover, VerifierStrategy& verifier,
          RandomTape& prover_tape, RandomTape& verifier_tape, SessionOutcome& outcome) {
  const auto start = Clock::now();
  auto& messages = outcome.view.messages;
  if (speaker == Sender::kProver) {
    messages.push_back({Sender::kProver, prover.next_message(messages, prover_tape)});
  } else {
    auto payload = verifier.next_message(messages, verifier_tape);
    if (!payload) {
      outcome.aborted = true;
      outcome.round_nanos.push_back(nanos_since(start));
      return false;
    }
    messages.push_back({Sender::kVerifier, *std::move(payload)});
  }
  outcome.round_nanos.push_back(nanos_since(start));
  return true;
}

void finish(VerifierStrategy& verifier, RandomTape& verifier_tape, SessionOutcome& outcome) {
  outcome.accepted = !outcome.aborted && verifier.decide(outcome.view.messages, verifier_tape);
  outcome.view.verifier_tape = {verifier_tape.seed(), verifier_tape.consumed()};
}

}  // namespace

SessionOutcome run_session(const RoundSchedule& schedule, ProverStrategy& prover,
                           VerifierStrategy& verifier, RandomTape& prover_tape,
                           RandomTape& verifier_tape) {
  SessionOutcome outcome;
  for (Sender speaker : schedule.speakers) {
    if (!step(speaker, prover, verifier, prover_tape, verifier_tape, outcome)) break;
  }
  finish(verifier, verifier_tape, outcome);
  return outcome;
}

CompositeOutcome run_sequential(const RoundSchedule& schedule, const StrategyFactory& factory,
                                std::size_t t, RandomTape& rng) {
  if (t == 0) throw Error(ErrorCode::kInvalidArgument, "repetition count must be positive");
  CompositeOutcome result;
  result.sessions.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    RandomTape prover_tape(rng.fork_seed());
    RandomTape verifier_tape(rng.fork_seed());
    auto parties = factory();
    result.sessions.push_back(
        run_session(schedule, *parties.prover, *parties.verifier, prover_tape, verifier_tape));
    if (result.sessions.back().accepted) ++result.accepted_sessions;
  }
  result.accepted = result.accepted_sessions == t;
  return result;
}

CompositeOutcome run_parallel(const RoundSchedule& schedule, const StrategyFactory& factory,
                              std::size_t t, RandomTape& rng) {
  if (t == 0) throw Error(ErrorCode::kInvalidArgument, "repetition count must be positive");
  std::vector<StrategyPair> parties;
  std::vector<RandomTape> prover_tapes;
  std::vector<RandomTape> verifier_tapes;
  for (std::size_t i = 0; i < t; ++i) {
    prover_tapes.emplace_back(rng.fork_seed());
    verifier_tapes.emplace_back(rng.fork_seed());
    parties.push_back(factory());
  }
  CompositeOutcome result;
  result.lockstep = true;
  result.sessions.resize(t);
  for (Sender speaker : schedule.speakers) {
    for (std::size_t i = 0; i < t; ++i) {
      if (result.sessions[i].aborted) continue;
      step(speaker, *parties[i].prover, *parties[i].verifier, prover_tapes[i], verifier_tapes[i],
           result.sessions[i]);
    }
  }
  for (std::size_t i = 0; i < t; ++i) {
    finish(*parties[i].verifier, verifier_tapes[i], result.sessions[i]);
    if (result.sessions[i].accepted) ++result.accepted_sessions;
  }
  result.accepted = result.accepted_sessions == t;
  return result;
}

std::string format_transcript(const CompositeOutcome& outcome) {
  std::ostringstream os;
  auto line = [&](std::size_t s, std::size_t r, const Message& m) {
    os << 's' << (s + 1) << ".r" << (r + 1) << ' '
       << (m.sender == Sender::kProver ? 'P' : 'V') << ' ' << format_payload(m.payload) << '\n';
  };
  if (outcome.lockstep) {
    std::size_t rounds = 0;
    for (const auto& s : outcome.sessions) rounds = std::max(rounds, s.view.messages.size());
    for (std::size_t r = 0; r < rounds; ++r) {
      for (std::size_t s = 0; s < outcome.sessions.size(); ++s) {
        const auto& msgs = outcome.sessions[s].view.messages;
        if (r < msgs.size()) line(s, r, msgs[r]);
      }
    }
  } else {
    for (std::size_t s = 0; s < outcome.sessions.size(); ++s) {
      const auto& msgs = outcome.sessions[s].view.messages;
      for (std::size_t r = 0; r < msgs.size(); ++r) line(s, r, msgs[r]);
    }
  }
  os << (outcome.accepted ? "ACCEPT" : "REJECT") << '\n';
  return os.str();
}

std::optional<bool> replay_verdict(const RoundSchedule& schedule, VerifierStrategy& verifier,
                                   const View& view) {
  RandomTape tape(view.verifier_tape.seed);
  std::vector<Message> history;
  bool aborted = false;
  std::size_t next = 0;
  for (Sender speaker : schedule.speakers) {
    if (speaker == Sender::kProver) {
      if (next >= view.messages.size() || view.messages[next].sender != Sender::kProver) {
        return std::nullopt;
      }
      history.push_back(view.messages[next++]);
    } else {
      auto payload = verifier.next_message(history, tape);
      if (!payload) {
        aborted = true;
        break;
      }
      if (next >= view.messages.size() || view.messages[next].payload != *payload) {
        return std::nullopt;
      }
      history.push_back(view.messages[next++]);
    }
  }
  if (next != view.messages.size()) return std::nullopt;
  const bool verdict = !aborted && verifier.decide(history, tape);
  if (tape.consumed() != view.verifier_tape.consumed) return std::nullopt;
  return verdict;
}

}  // namespace permzk
