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

#include <boost/rational.hpp>
#include <map>
#include <tuple>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "permzk/elem_conj.hpp"
#include "permzk/error.hpp"
#include "permzk/group_conj.hpp"
#include "permzk/simulator.hpp"
#include "permzk/stats.hpp"

namespace permzk {
namespace {

using P = Permutation;
using Q = boost::rational<std::int64_t>;
// (commitment, beta, w) as raw vectors: the oracle's notion of a view once
// the tape prefix is fixed.
using RawView = std::tuple<std::vector<oracle::Raw>, std::string, oracle::Raw>;

const std::vector<std::string> kPrograms = {"honest", "const0", "const1", "parity"};
const std::vector<std::uint64_t> kTapes = {1, 2, 0xdeadbeef};

std::shared_ptr<const GroupStatement> tiny(std::optional<P> witness = std::nullopt) {
  auto g = fixtures::group("tiny.inst");
  g.witness = witness;
  return std::make_shared<const GroupStatement>(with_witness(g), 2);
}

RawView raw_view(const SimulatedView& v) {
  std::vector<oracle::Raw> c;
  for (const auto& a : v.commitment) c.push_back(oracle::raw(a));
  return {c, v.beta, oracle::raw(v.w)};
}

// The set S from its definition, searching all pairs of S_3.
std::set<RawView> oracle_view_set(const GroupStatement& s, const VerifierProgram& program,
                                  std::uint64_t r) {
  const auto& g = s.instance();
  const auto all = oracle::all_perms(3);
  std::set<RawView> out;
  for (const auto& w : oracle::closure(g.u)) {
    for (const auto& x : all) {
      for (const auto& y : all) {
        std::vector<P> tuple = {oracle::cooked(x), oracle::cooked(y)};
        RandomTape tape(r);
        const std::string beta = program.challenge(s, tape, tuple);
        const auto& side = challenge_delta(beta) ? g.a1 : g.a0;
        if (oracle::closure({x, y}, 3) == oracle::closure(oracle::conj_all(oracle::raws(side), w), 3)) {
          out.insert({{x, y}, beta, w});
        }
      }
    }
  }
  return out;
}

// Pairs over <A^w> generating it, by oracle closure.
std::vector<std::vector<oracle::Raw>> oracle_pairs(const GeneratingSet& a, const oracle::Raw& w) {
  const auto target = oracle::closure(oracle::conj_all(oracle::raws(a), w), 3);
  std::vector<std::vector<oracle::Raw>> out;
  for (const auto& x : target) {
    for (const auto& y : target) {
      if (oracle::closure({x, y}, 3) == target) out.push_back({x, y});
    }
  }
  return out;
}

TEST(ExactZk, ViewSetMatchesDefinition) {
  const auto s = tiny();
  for (const auto& name : kPrograms) {
    const auto program = make_verifier_program(name);
    for (auto r : kTapes) {
      const auto truth = oracle_view_set(*s, *program, r);
      EXPECT_EQ(truth.size(), 24u);
      std::set<RawView> got;
      for (const auto& v : enumerate_view_set(*s, *program, r)) {
        EXPECT_TRUE(in_view_set(*s, *program, r, v));
        got.insert(raw_view(v));
      }
      EXPECT_EQ(got, truth) << name << " r=" << r;
    }
  }
}

TEST(ExactZk, BothLawsUniformOnViewSetByOracle) {
  const auto s = tiny();
  const auto& g = s->instance();
  const auto v = oracle::raw(*s->witness());
  const auto masks = oracle::closure(g.u);
  for (const auto& name : kPrograms) {
    const auto program = make_verifier_program(name);
    for (auto r : kTapes) {
      const auto truth = oracle_view_set(*s, *program, r);
      auto challenge = [&](const std::vector<oracle::Raw>& t, std::uint64_t& consumed) {
        std::vector<P> tuple;
        for (const auto& x : t) tuple.push_back(oracle::cooked(x));
        RandomTape tape(r);
        auto beta = program->challenge(*s, tape, tuple);
        consumed = tape.consumed();
        return beta;
      };
      // Real law: u uniform, tuple uniform on G(A1^u, 2), w = u or v u.
      std::map<RawView, Q> real;
      for (const auto& u : masks) {
        const auto pairs = oracle_pairs(g.a1, u);
        for (const auto& x : pairs) {
          std::uint64_t consumed = 0;
          const auto beta = challenge(x, consumed);
          const auto w = challenge_delta(beta) ? u : oracle::mul(v, u);
          real[{x, beta, w}] += Q(1, static_cast<std::int64_t>(masks.size() * pairs.size()));
        }
      }
      // Simulator law: one body run, conditioned on success.
      std::map<RawView, Q> sim;
      Q success(0);
      for (const auto& w : masks) {
        for (int alpha = 0; alpha < 2; ++alpha) {
          const auto pairs = oracle_pairs(alpha ? g.a1 : g.a0, w);
          for (const auto& x : pairs) {
            std::uint64_t consumed = 0;
            const auto beta = challenge(x, consumed);
            if (challenge_delta(beta) != alpha) continue;
            const Q p(1, static_cast<std::int64_t>(masks.size() * 2 * pairs.size()));
            sim[{x, beta, w}] += p;
            success += p;
          }
        }
      }
      for (auto& [k, p] : sim) p /= success;
      const Q each(1, static_cast<std::int64_t>(truth.size()));
      ASSERT_EQ(real.size(), truth.size());
      ASSERT_EQ(sim.size(), truth.size());
      for (const auto& view : truth) {
        EXPECT_EQ(real.at(view), each);
        EXPECT_EQ(sim.at(view), each);
      }
      // And the library's own exact laws agree with the oracle's.
      for (const auto& [view, p] : exact_real_law(*s, *program, r)) EXPECT_EQ(real.at(raw_view(view)), p);
      for (const auto& [view, p] : exact_simulated_law(*s, *program, r)) EXPECT_EQ(sim.at(raw_view(view)), p);
    }
  }
}

TEST(ExactZk, CompareExactOkForAllProgramsAndTapes) {
  const auto s = tiny();
  for (const auto& name : kPrograms) {
    for (auto r : kTapes) {
      const auto report = compare_exact(*s, *make_verifier_program(name), r);
      EXPECT_TRUE(report.ok()) << name << " r=" << r;
      EXPECT_EQ(report.view_set_size, 24u);
      EXPECT_TRUE(verify_phi_bijection(*s, *make_verifier_program(name), r));
    }
  }
}

TEST(ExactZk, WitnessChoiceDoesNotMatter) {
  // (1 2 3) is also a valid witness for the tiny instance.
  const auto s = tiny(P::from_cycles(3, {{1, 2, 3}}));
  for (const auto& name : kPrograms) EXPECT_TRUE(compare_exact(*s, *make_verifier_program(name), 5).ok());
}

TEST(Phi, CasesFollowTheChallenge) {
  const auto v = P::from_cycles(3, {{1, 2, 3}});
  const auto s = tiny(v);
  const std::vector<P> x = {P::from_cycles(3, {{1, 2, 3}}), P::identity(3)};
  const auto u = P::from_cycles(3, {{1, 3, 2}});
  const auto one = phi(*s, *make_verifier_program("const1"), 1, x, u);
  EXPECT_EQ(one.w, u);
  EXPECT_EQ(one.commitment[0], conjugate(x[0], u));
  const auto zero = phi(*s, *make_verifier_program("const0"), 1, x, u);
  EXPECT_EQ(zero.w, compose(v, u));
  EXPECT_EQ(psi(*s, zero), (PhiPreimage{x, u}));
  EXPECT_EQ(psi(*s, one), (PhiPreimage{x, u}));
}

TEST(Phi, CorruptedMapIsCaught) {
  // With the identity as witness dropping v changes nothing, so use (1 2 3).
  const auto s = tiny(P::from_cycles(3, {{1, 2, 3}}));
  const PhiMap drop_v = [](const ConjugacyStatement& st, const VerifierProgram& program,
                           std::uint64_t r, std::span<const Permutation> x, const Permutation& u) {
    auto view = phi(st, program, r, x, u);
    view.w = u;
    return view;
  };
  EXPECT_FALSE(verify_phi_bijection(*s, *make_verifier_program("const0"), 1,
                                    kDefaultEnumerationCap, drop_v));
  EXPECT_TRUE(verify_phi_bijection(*s, *make_verifier_program("const0"), 1));
  const PhiMap constant = [](const ConjugacyStatement& st, const VerifierProgram& program,
                             std::uint64_t r, std::span<const Permutation> x, const Permutation&) {
    return phi(st, program, r, x, Permutation::identity(3));
  };
  EXPECT_FALSE(verify_phi_bijection(*s, *make_verifier_program("honest"), 1,
                                    kDefaultEnumerationCap, constant));
}

TEST(Simulate, RestartsAndAttemptsAtDegreeSix) {
  const auto s = std::make_shared<const GroupStatement>(fixtures::group("swap3_groups.inst"));
  ASSERT_EQ(s->commitment_length(), 24u);
  for (const char* name : {"honest", "const1", "parity"}) {
    const auto program = make_verifier_program(name);
    SimulatorStats stats;
    RandomTape rng(606);
    for (int i = 0; i < 5000; ++i) simulate(*s, *program, 1000 + i, rng, &stats);
    const double restarts = stats.iterations / 5000.0;
    EXPECT_GE(restarts, 1.8) << name;
    EXPECT_LE(restarts, 2.2) << name;
    EXPECT_LE(static_cast<double>(stats.tuple_attempts) / stats.iterations, 2.2) << name;
    EXPECT_LE(stats.tuple_attempts / 5000.0, 4.4) << name;
  }
}

TEST(Simulate, RewindsToTheSameTape) {
  const auto s = tiny();
  const auto program = make_verifier_program("honest");
  RandomTape rng(3);
  for (int i = 0; i < 200; ++i) {
    SimulatorStats stats;
    const auto view = simulate(*s, *program, 77, rng, &stats);
    ASSERT_EQ(stats.verifier_calls.size(), stats.iterations);
    for (const auto& call : stats.verifier_calls) EXPECT_EQ(call, (TapePrefix{77, 1}));
    EXPECT_EQ(view.r_prefix, stats.verifier_calls.back());
  }
}

TEST(Simulate, OutputsLieInViewSet) {
  const auto s = std::make_shared<const GroupStatement>(with_witness(fixtures::group("dihedral4.inst")));
  for (const auto& name : kPrograms) {
    std::shared_ptr<const VerifierProgram> program = make_verifier_program(name);
    RandomTape rng(8);
    for (int i = 0; i < 100; ++i) {
      EXPECT_TRUE(in_view_set(*s, *program, i, simulate(*s, *program, i, rng)));
      EXPECT_TRUE(in_view_set(*s, *program, i, real_view(s, program, i, rng)));
    }
  }
}

TEST(Simulate, RestartCapIsEnforced) {
  const auto s = tiny();
  const auto program = make_verifier_program("const1");
  RandomTape rng(1);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    try {
      simulate(*s, *program, 1, rng, nullptr, 1);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kRestartCapExceeded);
      ++failures;
    }
  }
  EXPECT_GT(failures, 20);
  EXPECT_LT(failures, 80);
}

TEST(RealView, HonestChallengeIsFair) {
  const auto s = std::make_shared<const GroupStatement>(fixtures::group("swap3_groups.inst"));
  std::shared_ptr<const VerifierProgram> program = make_verifier_program("honest");
  RandomTape rng(2);
  int ones = 0;
  for (int i = 0; i < 4000; ++i) ones += challenge_delta(real_view(s, program, rng(), rng).beta);
  EXPECT_NEAR(ones / 4000.0, 0.5, 0.03);
}

TEST(RealView, RefusesNoInstances) {
  const auto s = std::make_shared<const GroupStatement>(with_witness(fixtures::group("transposition_no.inst")));
  std::shared_ptr<const VerifierProgram> program = make_verifier_program("honest");
  RandomTape rng(1);
  EXPECT_THROW(real_view(s, program, 1, rng), Error);
  try {
    compare_exact(*s, *program, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
    EXPECT_NE(std::string(e.what()).find("yes-instances"), std::string::npos);
  }
}

TEST(StatisticalZk, DegreeSixTwoSample) {
  const auto s = std::make_shared<const GroupStatement>(fixtures::group("swap3_groups.inst"));
  for (const auto& name : kPrograms) {
    RandomTape rng(44);
    const auto report = compare_statistical(s, make_verifier_program(name), 9, 5000, rng);
    EXPECT_GT(report.chi2_p, 1e-3) << name;
    EXPECT_GT(report.dof, 4u) << name;
    EXPECT_LE(report.tv_empirical, report.tv_upper);
  }
}

TEST(CommitmentHiding, SidesHaveIdenticalLawOnTiny) {
  const auto s = tiny();
  const auto masks = s->mask_group().elements(100);
  std::map<std::vector<P>, Q> law[2];
  for (int side = 0; side < 2; ++side) {
    for (const auto& w : masks) {
      const auto cs = s->enumerate_commitments(side, w, 1000);
      for (const auto& c : cs) law[side][c] += Q(1, static_cast<std::int64_t>(masks.size() * cs.size()));
    }
  }
  EXPECT_EQ(law[0], law[1]);
  EXPECT_EQ(law[0].size(), 8u);
}

// Counts of tuples whose generated group is <A0^w> for each w, for
// commitments to one side with uniform masks.
TEST(CommitmentHiding, SidesAgreeStatisticallyAtDegreeSix) {
  const auto s = std::make_shared<const GroupStatement>(fixtures::group("swap3_groups.inst"));
  RandomTape rng(12);
  std::vector<std::uint64_t> counts[2] = {std::vector<std::uint64_t>(16, 0),
                                          std::vector<std::uint64_t>(16, 0)};
  for (int side = 0; side < 2; ++side) {
    for (int i = 0; i < 4000; ++i) {
      const auto w = s->mask_group().random_element(rng);
      const auto c = s->commit(side, w, rng);
      const bool low = StabilizerChain(GeneratingSet(6, c)).contains(P::from_cycles(6, {{1, 2, 3}}));
      const auto h = hash_value(c[0]) ^ (hash_value(c[1]) >> 7);
      ++counts[side][(low ? 8 : 0) + (h >> 20) % 8];
    }
  }
  EXPECT_GT(chi_square_two_sample(counts[0], counts[1]).p_value, 1e-3);
}

TEST(ElementZk, ExactOnTinyElementInstance) {
  ElemConjInstance e{3, P::from_cycles(3, {{1, 2}}), P::from_cycles(3, {{1, 3}}),
                     GeneratingSet(3, {P::from_cycles(3, {{2, 3}})}), std::nullopt};
  const ElementStatement s(with_witness(e));
  for (const auto& name : kPrograms) {
    for (auto r : kTapes) {
      const auto report = compare_exact(s, *make_verifier_program(name), r);
      EXPECT_TRUE(report.ok()) << name;
      EXPECT_EQ(report.view_set_size, 2u);
    }
  }
}

TEST(ElementZk, SimulatorNeedsNoTupleSampling) {
  const auto s = std::make_shared<const ElementStatement>(
      with_witness(fixtures::element("swap3_elements.inst")));
  // Not a yes-instance for elements; use a conjugate pair instead.
  ElemConjInstance e{6, P::from_cycles(6, {{1, 2, 3}}), P::from_cycles(6, {{4, 6, 5}}),
                     GeneratingSet(6, {P::from_cycles(6, {{1, 4}, {2, 6}, {3, 5}})}), std::nullopt};
  const ElementStatement yes(with_witness(e));
  ASSERT_TRUE(yes.witness());
  SimulatorStats stats;
  RandomTape rng(5);
  const auto program = make_verifier_program("honest");
  for (int i = 0; i < 5000; ++i) simulate(yes, *program, 100 + i, rng, &stats);
  EXPECT_EQ(stats.tuple_attempts, 0u);
  EXPECT_NEAR(stats.iterations / 5000.0, 2.0, 0.1);
  EXPECT_FALSE(s->witness());
}

}  // namespace
}  // namespace permzk
