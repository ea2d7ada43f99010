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

#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "permzk/error.hpp"
#include "permzk/group_conj.hpp"
#include "permzk/stats.hpp"

namespace permzk {
namespace {

using P = Permutation;

const std::vector<std::string> kYes = {"tiny.inst",     "swap3_groups.inst", "klein_swap.inst",
                                       "dihedral4.inst", "cyclic5.inst",      "trivial4.inst",
                                       "transposition_yes.inst"};
const std::vector<std::string> kNo = {"swap3_groups_unmasked.inst", "transposition_no.inst",
                                      "shape_no.inst"};

std::shared_ptr<const GroupStatement> statement(const std::string& name, std::size_t k = 0) {
  return std::make_shared<const GroupStatement>(with_witness(fixtures::group(name)), k);
}

TEST(FindConjugator, FixtureAnswersMatchOracle) {
  for (const auto& name : kYes) {
    const auto g = fixtures::group(name);
    const auto v = find_group_conjugator(g.a0, g.a1, g.u);
    ASSERT_TRUE(v) << name;
    EXPECT_TRUE(certifies(g, *v)) << name;
    EXPECT_TRUE(oracle::groups_conjugate(g.a0, g.a1, g.u)) << name;
  }
  for (const auto& name : kNo) {
    const auto g = fixtures::group(name);
    EXPECT_FALSE(find_group_conjugator(g.a0, g.a1, g.u)) << name;
    EXPECT_FALSE(oracle::groups_conjugate(g.a0, g.a1, g.u)) << name;
  }
}

TEST(FindConjugator, Examples) {
  const auto g = fixtures::group("swap3_groups.inst");
  EXPECT_EQ(find_group_conjugator(g.a0, g.a1, g.u), P::from_cycles(6, {{1, 4}, {2, 6}, {3, 5}}));
  const GeneratingSet s4 = fixtures::single("s4.inst");
  const auto same = find_group_conjugator(s4, s4, s4);
  ASSERT_TRUE(same);
  EXPECT_TRUE(same->is_identity());
  const GeneratingSet a(3, {P::from_cycles(3, {{1, 2}})});
  const GeneratingSet b(3, {P::from_cycles(3, {{1, 3}})});
  EXPECT_FALSE(find_group_conjugator(a, b, GeneratingSet(3, {P::identity(3)})));
}

TEST(FindConjugator, BudgetExceeded) {
  const GeneratingSet s4 = fixtures::single("s4.inst");
  try {
    find_group_conjugator(s4, s4, s4, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(FindConjugator, RandomInstancesAgreeWithOracle) {
  RandomTape rng(31);
  int yes = 0;
  for (int i = 0; i < 150; ++i) {
    const std::size_t m = 3 + rng.uniform_below(2);
    auto rp = [&] {
      oracle::Raw r = oracle::identity(static_cast<int>(m));
      std::shuffle(r.begin(), r.end(), rng);
      return oracle::cooked(r);
    };
    const GeneratingSet a0(m, {rp()});
    const GeneratingSet a1(m, {rp()});
    const GeneratingSet u(m, {rp()});
    const bool truth = oracle::groups_conjugate(a0, a1, u);
    yes += truth;
    EXPECT_EQ(find_group_conjugator(a0, a1, u).has_value(), truth);
  }
  EXPECT_GT(yes, 5);
}

TEST(ProverRound1, CommitmentOpensToMaskedSideOne) {
  const auto s = statement("swap3_groups.inst");
  EXPECT_EQ(s->commitment_length(), 24u);
  RandomTape rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto state = prover_round1(*s, rng);
    ASSERT_EQ(state.commitment.size(), 24u);
    EXPECT_TRUE(s->mask_group().contains(state.u));
    const StabilizerChain target(conjugate_set(s->instance().a1, state.u));
    for (const auto& a : state.commitment) EXPECT_TRUE(target.contains(a));
    EXPECT_TRUE(group_equal(StabilizerChain(GeneratingSet(6, state.commitment)), target));
    EXPECT_GE(state.attempts, 1u);
  }
}

TEST(ProverRound1, TrivialGroupsGiveIdentities) {
  GroupConjInstance g{4, GeneratingSet(4), GeneratingSet(4), GeneratingSet(4), std::nullopt};
  const GroupStatement s(with_witness(g));
  RandomTape rng(1);
  const auto state = prover_round1(s, rng);
  EXPECT_EQ(state.commitment.size(), 16u);
  for (const auto& a : state.commitment) EXPECT_TRUE(a.is_identity());
}

TEST(ProverRound1, EntryMarginalMatchesExactLaw) {
  // <A1>^u is the cyclic group of order 3 for every mask. Among the
  // generating 12-tuples, 3^11 - 1 start with the identity and 3^11 start
  // with each nontrivial element.
  const auto s = statement("tiny.inst");
  ASSERT_EQ(s->commitment_length(), 12u);
  const double pow11 = 177147.0;
  const double total = 3 * pow11 - 1;
  const std::vector<double> law = {(pow11 - 1) / total, pow11 / total, pow11 / total};
  const auto elems = StabilizerChain(s->instance().a1).elements(10);
  std::vector<std::uint64_t> counts(3, 0);
  RandomTape rng(12);
  for (int i = 0; i < 6000; ++i) {
    const auto state = prover_round1(*s, rng);
    const auto it = std::find(elems.begin(), elems.end(), state.commitment[0]);
    ASSERT_NE(it, elems.end());
    ++counts[it - elems.begin()];
  }
  EXPECT_GT(chi_square_gof(counts, law).p_value, 1e-3);
}

TEST(VerifierRound1, ShapeChecks) {
  const auto s = statement("tiny.inst", 2);
  const std::vector<P> good = {P::from_cycles(3, {{1, 2, 3}}), P::identity(3)};
  EXPECT_TRUE(verifier_round1_check(*s, tuple_payload(good)));
  EXPECT_FALSE(verifier_round1_check(*s, tuple_payload(std::span(good).first(1))));
  EXPECT_FALSE(verifier_round1_check(*s, Payload{TuplePayload{{{1, 2, 2}, {1, 2, 3}}}}));
  EXPECT_FALSE(verifier_round1_check(*s, bits_payload("1")));
}

TEST(VerifierRound2, BitsOnly) {
  RandomTape rng(3);
  int ones = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto b = verifier_round2(rng);
    ASSERT_TRUE(b == "0" || b == "1");
    ones += b == "1";
  }
  EXPECT_NEAR(ones / 10000.0, 0.5, 0.02);
  EXPECT_EQ(rng.consumed(), 10000u);
}

TEST(ChallengeDelta, OnlyTheCanonicalOneCounts) {
  EXPECT_EQ(challenge_delta("1"), 1);
  EXPECT_EQ(challenge_delta("0"), 0);
  EXPECT_EQ(challenge_delta(""), 0);
  EXPECT_EQ(challenge_delta("11"), 0);
  EXPECT_EQ(challenge_delta(" 1"), 0);
  EXPECT_EQ(challenge_delta(std::string_view("\x01", 1)), 0);
}

TEST(ProverRound3, ResponseFollowsChallenge) {
  const auto s = statement("swap3_groups.inst");
  const auto v = *s->witness();
  RandomTape rng(4);
  const auto state = prover_round1(*s, rng);
  EXPECT_EQ(prover_round3(state, *s, "1"), state.u);
  EXPECT_EQ(prover_round3(state, *s, "0"), compose(v, state.u));
  EXPECT_EQ(prover_round3(state, *s, "yes"), compose(v, state.u));
  EXPECT_EQ(prover_round3(state, *s, ""), compose(v, state.u));
}

TEST(ProverRound3, NeedsWitness) {
  const auto s = statement("transposition_no.inst");
  RandomTape rng(1);
  const auto state = prover_round1(*s, rng);
  try {
    prover_round3(state, *s, "0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
}

TEST(VerifierRound3, HonestAnswersAcceptForBothChallenges) {
  for (const auto& name : kYes) {
    const auto s = statement(name);
    RandomTape rng(6);
    for (int i = 0; i < 5; ++i) {
      const auto state = prover_round1(*s, rng);
      for (const char* beta : {"0", "1", "junk"}) {
        EXPECT_TRUE(verifier_round3_check(*s, state.commitment, beta,
                                          prover_round3(state, *s, beta)))
            << name << ' ' << beta;
      }
    }
  }
}

TEST(VerifierRound3, MaskOutsideURejected) {
  const auto s = statement("swap3_groups.inst");
  RandomTape rng(2);
  const auto state = prover_round1(*s, rng);
  // (1 2 3) preserves <(1 2 3)>, so only the membership test can catch it.
  const auto outside = compose(state.u, P::from_cycles(6, {{1, 2, 3}}));
  ASSERT_FALSE(s->mask_group().contains(outside));
  EXPECT_FALSE(verifier_round3_check(*s, state.commitment, "1", outside));
  EXPECT_FALSE(verifier_round3_check(*s, std::span(state.commitment).first(3), "1", state.u));
}

TEST(Soundness, NoCommitmentOpensBothWaysOnNoInstances) {
  // A tuple opening to A0^w0 and to A1^w1 would make the two groups equal.
  for (const auto& name : kNo) {
    const auto g = fixtures::group(name);
    const auto masks = StabilizerChain(g.u).elements(1000);
    for (const auto& w0 : masks) {
      for (const auto& w1 : masks) {
        EXPECT_FALSE(group_equal(conjugate_set(g.a0, w0), conjugate_set(g.a1, w1))) << name;
      }
    }
  }
}

TEST(Soundness, ForkedAnswersExtractAWitness) {
  for (const auto& name : kYes) {
    const auto s = statement(name);
    RandomTape rng(77);
    for (int i = 0; i < 5; ++i) {
      const auto state = prover_round1(*s, rng);
      const auto w0 = prover_round3(state, *s, "0");
      const auto w1 = prover_round3(state, *s, "1");
      ASSERT_TRUE(verifier_round3_check(*s, state.commitment, "0", w0));
      ASSERT_TRUE(verifier_round3_check(*s, state.commitment, "1", w1));
      const auto extracted = compose(w0, inverse(w1));
      EXPECT_TRUE(certifies(s->instance(), extracted)) << name;
    }
  }
}

StrategyFactory factory(std::shared_ptr<const GroupStatement> s, int kind) {
  return [s, kind] {
    std::unique_ptr<ProverStrategy> p;
    if (kind == 0) p = std::make_unique<HonestProver>(s);
    if (kind == 1) p = std::make_unique<GuessingProver>(s);
    if (kind == 2) p = std::make_unique<MalformedProver>(s);
    return StrategyPair{std::move(p), std::make_unique<HonestVerifier>(s)};
  };
}

double rate(std::shared_ptr<const GroupStatement> s, int kind, std::size_t trials,
            std::uint64_t seed) {
  RandomTape rng(seed);
  std::size_t acc = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    acc += run_sequential(commit_challenge_response_schedule(), factory(s, kind), 1, rng).accepted;
  }
  return static_cast<double>(acc) / static_cast<double>(trials);
}

TEST(Completeness, HonestAlwaysAcceptsOnYesFixtures) {
  for (const auto& name : kYes) EXPECT_EQ(rate(statement(name), 0, 300, 1), 1.0) << name;
}

TEST(Soundness, GuessingCheaterNearHalfOnNoFixtures) {
  std::uint64_t seed = 500;
  for (const auto& name : kNo) EXPECT_NEAR(rate(statement(name), 1, 2000, seed++), 0.5, 0.03) << name;
}

TEST(Soundness, GuessingCheaterAtLeastHalfOnYesFixtures) {
  EXPECT_GE(rate(statement("swap3_groups.inst"), 1, 2000, 9), 0.5 - 0.03);
  // <A0> = <A1> and <U> normalizes it, so every guess opens correctly.
  EXPECT_EQ(rate(statement("tiny.inst"), 1, 500, 9), 1.0);
}

TEST(Soundness, MalformedProverNeverAccepted) {
  EXPECT_EQ(rate(statement("swap3_groups.inst"), 2, 200, 3), 0.0);
}

// Sends arbitrary byte strings as the challenge.
class ByteVerifier final : public HonestVerifier {
 public:
  using HonestVerifier::HonestVerifier;

 protected:
  std::string challenge(std::span<const Permutation>, RandomTape& tape) override {
    std::string s(tape.uniform_below(4), '\0');
    for (auto& c : s) c = static_cast<char>(tape.uniform_below(256));
    if (tape.uniform_below(4) == 0) s = "1";
    return s;
  }
};

TEST(ChallengeDelta, EveryByteStringGetsAnAnswer) {
  const auto s = statement("dihedral4.inst");
  RandomTape rng(13);
  for (int i = 0; i < 300; ++i) {
    HonestProver prover(s);
    ByteVerifier verifier(s);
    RandomTape pt(rng.fork_seed()), vt(rng.fork_seed());
    const auto out = run_session(commit_challenge_response_schedule(), prover, verifier, pt, vt);
    ASSERT_EQ(out.view.messages.size(), 3u);
    const auto w = as_permutation(out.view.messages[2].payload, 4);
    ASSERT_TRUE(w);
    EXPECT_TRUE(s->mask_group().contains(*w));
    EXPECT_TRUE(out.accepted);
  }
}

}  // namespace
}  // namespace permzk
