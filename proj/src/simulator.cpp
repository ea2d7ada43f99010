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

#include "permzk/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "permzk/error.hpp"
#include "permzk/stats.hpp"

namespace permzk {

namespace {

class HonestProgram final : public VerifierProgram {
 public:
  std::string name() const override { return "honest"; }
  std::string challenge(const ConjugacyStatement&, RandomTape& tape,
                        std::span<const Permutation>) const override {
    return verifier_round2(tape);
  }
};

class ConstantProgram final : public VerifierProgram {
 public:
  explicit ConstantProgram(int bit) : bit_(bit) {}
  std::string name() const override { return bit_ ? "const1" : "const0"; }
  std::string challenge(const ConjugacyStatement&, RandomTape&,
                        std::span<const Permutation>) const override {
    return bit_string(bit_);
  }

 private:
  int bit_;
};

class ParityProgram final : public VerifierProgram {
 public:
  std::string name() const override { return "parity"; }
  std::string challenge(const ConjugacyStatement&, RandomTape&,
                        std::span<const Permutation> commitment) const override {
    std::uint64_t sum = 0;
    for (const auto& a : commitment) sum += a.image(1);
    return bit_string(static_cast<int>(sum & 1));
  }
};

void require_witness(const ConjugacyStatement& statement) {
  if (!statement.witness()) {
    throw Error(ErrorCode::kPrecondition, "ZK claimed only on yes-instances");
  }
}

SimulatedView make_view(std::uint64_t r_seed, const RandomTape& tape,
                        std::vector<Permutation> commitment, std::string beta, Permutation w) {
  return SimulatedView{{r_seed, tape.consumed()}, std::move(commitment), std::move(beta),
                       std::move(w)};
}

}  // namespace

std::unique_ptr<VerifierProgram> make_verifier_program(std::string_view name) {
  if (name == "honest") return std::make_unique<HonestProgram>();
  if (name == "const0") return std::make_unique<ConstantProgram>(0);
  if (name == "const1") return std::make_unique<ConstantProgram>(1);
  if (name == "parity") return std::make_unique<ParityProgram>();
  throw Error(ErrorCode::kInvalidArgument, "unknown verifier program '" + std::string(name) + "'");
}

ProgramVerifier::ProgramVerifier(std::shared_ptr<const ConjugacyStatement> statement,
                                 std::shared_ptr<const VerifierProgram> program)
    : HonestVerifier(std::move(statement)), program_(std::move(program)) {}

std::string ProgramVerifier::challenge(std::span<const Permutation> commitment,
                                       RandomTape& tape) {
  return program_->challenge(*statement_, tape, commitment);
}

bool in_view_set(const ConjugacyStatement& statement, const VerifierProgram& program,
                 std::uint64_t r_seed, const SimulatedView& view) {
  if (view.w.degree() != statement.degree() || !statement.mask_group().contains(view.w)) {
    return false;
  }
  RandomTape tape(r_seed);
  const std::string beta = program.challenge(statement, tape, view.commitment);
  if (beta != view.beta) return false;
  if (view.r_prefix != TapePrefix{r_seed, tape.consumed()}) return false;
  return view.commitment.size() == statement.commitment_length() &&
         statement.opens_to(view.commitment, challenge_delta(beta), view.w);
}

SimulatedView simulate(const ConjugacyStatement& statement, const VerifierProgram& program,
                       std::uint64_t r_seed, RandomTape& rng, SimulatorStats* stats,
                       std::size_t restart_cap) {
  SimulatorStats local;
  SimulatorStats& s = stats ? *stats : local;
  for (std::size_t i = 0; i < restart_cap; ++i) {
    ++s.iterations;
    Permutation w = statement.mask_group().random_element(rng);
    const int alpha = rng.bit() ? 1 : 0;
    auto commitment = statement.commit(alpha, w, rng, &s.tuple_attempts);
    // Rewind: every run of the program starts from the same tape r.
    RandomTape tape(r_seed);
    std::string beta = program.challenge(statement, tape, commitment);
    s.verifier_calls.push_back({r_seed, tape.consumed()});
    if (challenge_delta(beta) == alpha) {
      return make_view(r_seed, tape, std::move(commitment), std::move(beta), std::move(w));
    }
  }
  throw Error(ErrorCode::kRestartCapExceeded,
              "simulator gave up after " + std::to_string(restart_cap) +
                  " restarts (not a yes-instance, or a broken verifier program)");
}

SimulatedView real_view(std::shared_ptr<const ConjugacyStatement> statement,
                        std::shared_ptr<const VerifierProgram> program, std::uint64_t r_seed,
                        RandomTape& prover_rng) {
  require_witness(*statement);
  HonestProver prover(statement);
  ProgramVerifier verifier(statement, std::move(program));
  RandomTape verifier_tape(r_seed);
  const auto outcome = run_session(commit_challenge_response_schedule(), prover, verifier,
                                   prover_rng, verifier_tape);
  const auto& msgs = outcome.view.messages;
  const std::size_t k = statement->commitment_length();
  return SimulatedView{outcome.view.verifier_tape,
                       *as_tuple(msgs.at(0).payload, statement->degree(), k),
                       *as_bits(msgs.at(1).payload),
                       *as_permutation(msgs.at(2).payload, statement->degree())};
}

SimulatedView phi(const ConjugacyStatement& statement, const VerifierProgram& program,
                  std::uint64_t r_seed, std::span<const Permutation> x, const Permutation& u) {
  require_witness(statement);
  std::vector<Permutation> a;
  a.reserve(x.size());
  for (const auto& xi : x) a.push_back(conjugate(xi, u));
  RandomTape tape(r_seed);
  std::string beta = program.challenge(statement, tape, a);
  Permutation w = challenge_delta(beta) ? u : compose(*statement.witness(), u);
  return make_view(r_seed, tape, std::move(a), std::move(beta), std::move(w));
}

PhiPreimage psi(const ConjugacyStatement& statement, const SimulatedView& view) {
  require_witness(statement);
  Permutation u =
      challenge_delta(view.beta) ? view.w : compose(inverse(*statement.witness()), view.w);
  const Permutation u_inv = inverse(u);
  std::vector<Permutation> x;
  x.reserve(view.commitment.size());
  for (const auto& a : view.commitment) x.push_back(conjugate(a, u_inv));
  return PhiPreimage{std::move(x), std::move(u)};
}

std::vector<SimulatedView> enumerate_view_set(const ConjugacyStatement& statement,
                                              const VerifierProgram& program,
                                              std::uint64_t r_seed, std::uint64_t cap) {
  std::set<SimulatedView> out;
  for (const auto& w : statement.mask_group().elements(cap)) {
    for (int alpha = 0; alpha < 2; ++alpha) {
      for (auto& c : statement.enumerate_commitments(alpha, w, cap)) {
        RandomTape tape(r_seed);
        std::string beta = program.challenge(statement, tape, c);
        if (challenge_delta(beta) != alpha) continue;
        out.insert(make_view(r_seed, tape, std::move(c), std::move(beta), w));
      }
    }
  }
  return {out.begin(), out.end()};
}

bool verify_phi_bijection(const ConjugacyStatement& statement, const VerifierProgram& program,
                          std::uint64_t r_seed, std::uint64_t cap, const PhiMap& map) {
  require_witness(statement);
  const Permutation e = Permutation::identity(statement.degree());
  const auto xs = statement.enumerate_commitments(1, e, cap);
  const auto us = statement.mask_group().elements(cap);
  std::set<SimulatedView> image;
  for (const auto& x : xs) {
    for (const auto& u : us) {
      SimulatedView view = map(statement, program, r_seed, x, u);
      if (!in_view_set(statement, program, r_seed, view)) return false;
      if (psi(statement, view) != PhiPreimage{x, u}) return false;
      image.insert(std::move(view));
    }
  }
  if (image.size() != xs.size() * us.size()) return false;
  return image.size() == enumerate_view_set(statement, program, r_seed, cap).size();
}

ViewLaw exact_real_law(const ConjugacyStatement& statement, const VerifierProgram& program,
                       std::uint64_t r_seed, std::uint64_t cap) {
  require_witness(statement);
  ViewLaw law;
  const auto us = statement.mask_group().elements(cap);
  for (const auto& u : us) {
    const auto commitments = statement.enumerate_commitments(1, u, cap);
    const Probability p(1, static_cast<std::int64_t>(us.size() * commitments.size()));
    for (const auto& c : commitments) {
      RandomTape tape(r_seed);
      std::string beta = program.challenge(statement, tape, c);
      Permutation w = challenge_delta(beta) ? u : compose(*statement.witness(), u);
      law[make_view(r_seed, tape, c, std::move(beta), std::move(w))] += p;
    }
  }
  return law;
}

ViewLaw exact_simulated_law(const ConjugacyStatement& statement, const VerifierProgram& program,
                            std::uint64_t r_seed, std::uint64_t cap) {
  ViewLaw law;
  Probability success(0);
  const auto ws = statement.mask_group().elements(cap);
  for (const auto& w : ws) {
    for (int alpha = 0; alpha < 2; ++alpha) {
      const auto commitments = statement.enumerate_commitments(alpha, w, cap);
      if (commitments.empty()) continue;
      const Probability p(1, static_cast<std::int64_t>(ws.size() * 2 * commitments.size()));
      for (const auto& c : commitments) {
        RandomTape tape(r_seed);
        std::string beta = program.challenge(statement, tape, c);
        if (challenge_delta(beta) != alpha) continue;
        law[make_view(r_seed, tape, c, std::move(beta), w)] += p;
        success += p;
      }
    }
  }
  if (success == Probability(0)) throw Error(ErrorCode::kPrecondition, "simulator body never succeeds");
  // Restarting until success conditions the one-iteration law on success.
  for (auto& [view, prob] : law) prob /= success;
  return law;
}

namespace {

bool uniform_on(const ViewLaw& law, const std::vector<SimulatedView>& set) {
  if (law.size() != set.size() || set.empty()) return false;
  const Probability each(1, static_cast<std::int64_t>(set.size()));
  std::size_t i = 0;
  for (const auto& [view, prob] : law) {
    if (!(view == set[i++]) || prob != each) return false;
  }
  return true;
}

}  // namespace

ExactReport compare_exact(const ConjugacyStatement& statement, const VerifierProgram& program,
                          std::uint64_t r_seed, std::uint64_t cap) {
  require_witness(statement);
  ExactReport report;
  const auto view_set = enumerate_view_set(statement, program, r_seed, cap);
  report.view_set_size = view_set.size();
  report.bijection = verify_phi_bijection(statement, program, r_seed, cap);
  const auto real = exact_real_law(statement, program, r_seed, cap);
  const auto simulated = exact_simulated_law(statement, program, r_seed, cap);
  report.real_uniform = uniform_on(real, view_set);
  report.simulated_uniform = uniform_on(simulated, view_set);
  report.laws_equal = real == simulated;
  return report;
}

StatisticalReport compare_statistical(std::shared_ptr<const ConjugacyStatement> statement,
                                      std::shared_ptr<const VerifierProgram> program,
                                      std::uint64_t r_seed, std::size_t samples, RandomTape& rng,
                                      std::size_t hash_buckets) {
  require_witness(*statement);
  if (samples == 0 || hash_buckets == 0) {
    throw Error(ErrorCode::kInvalidArgument, "samples and buckets must be positive");
  }
  const auto masks = statement->mask_group().elements(kDefaultProverCap);
  auto bucket = [&](const SimulatedView& v) {
    const auto w_index = static_cast<std::size_t>(
        std::lower_bound(masks.begin(), masks.end(), v.w) - masks.begin());
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& a : v.commitment) h = (h ^ hash_value(a)) * 1099511628211ULL;
    // Low bits of the chain above repeat when few distinct elements occur.
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebULL;
    h ^= h >> 31;
    return (static_cast<std::size_t>(challenge_delta(v.beta)) * masks.size() + w_index) *
               hash_buckets +
           static_cast<std::size_t>(h % hash_buckets);
  };
  const std::size_t cells = 2 * masks.size() * hash_buckets;
  std::vector<std::uint64_t> sim_counts(cells, 0);
  std::vector<std::uint64_t> real_counts(cells, 0);
  SimulatorStats stats;
  for (std::size_t i = 0; i < samples; ++i) {
    ++sim_counts[bucket(simulate(*statement, *program, r_seed, rng, &stats))];
    ++real_counts[bucket(real_view(statement, program, r_seed, rng))];
  }
  StatisticalReport report;
  report.samples = samples;
  report.restarts_mean = static_cast<double>(stats.iterations) / static_cast<double>(samples);
  report.attempts_per_iteration =
      static_cast<double>(stats.tuple_attempts) / static_cast<double>(stats.iterations);
  const auto chi = chi_square_two_sample(sim_counts, real_counts);
  report.chi2 = chi.statistic;
  report.dof = chi.dof;
  report.chi2_p = chi.p_value;
  report.tv_empirical = empirical_tv(sim_counts, real_counts);
  // Each empirical law is within eps/2 of its true law in TV with
  // probability 1 - 1e-3.
  report.tv_upper = report.tv_empirical + l1_deviation_bound(cells, samples, 1e-3);
  return report;
}

}  // namespace permzk
