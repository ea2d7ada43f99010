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

#include <boost/rational.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permzk/group_conj.hpp"

namespace permzk {

// A possibly cheating verifier, derandomised: its challenge is a pure
// function of the statement, its tape and the round-1 commitment.
class VerifierProgram {
 public:
  virtual ~VerifierProgram() = default;
  virtual std::string name() const = 0;
  virtual std::string challenge(const ConjugacyStatement& statement, RandomTape& tape,
                                std::span<const Permutation> commitment) const = 0;
};

// "honest" (one tape bit), "const0", "const1", "parity" (sum of the images
// of point 1 over the commitment, mod 2). Throws Error(kInvalidArgument).
std::unique_ptr<VerifierProgram> make_verifier_program(std::string_view name);

// Runs a VerifierProgram inside the real protocol, with the honest checks.
class ProgramVerifier final : public HonestVerifier {
 public:
  ProgramVerifier(std::shared_ptr<const ConjugacyStatement> statement,
                  std::shared_ptr<const VerifierProgram> program);

 protected:
  std::string challenge(std::span<const Permutation> commitment, RandomTape& tape) override;

 private:
  std::shared_ptr<const VerifierProgram> program_;
};

struct SimulatedView {
  TapePrefix r_prefix;
  std::vector<Permutation> commitment;
  std::string beta;
  Permutation w = Permutation::identity(1);

  friend auto operator<=>(const SimulatedView&, const SimulatedView&) = default;
};

// w in <U>, beta is what the program answers on tape r, and the commitment
// opens to side delta(beta) at w.
bool in_view_set(const ConjugacyStatement& statement, const VerifierProgram& program,
                 std::uint64_t r_seed, const SimulatedView& view);

struct SimulatorStats {
  std::size_t iterations = 0;       // executions of the simulator body
  std::size_t tuple_attempts = 0;   // generating-tuple draws over all iterations
  std::vector<TapePrefix> verifier_calls;
};

inline constexpr std::size_t kDefaultRestartCap = 10 * kDefaultTupleAttempts;

// Black-box simulator: guess side alpha and mask w, commit, rewind the
// program to tape r each time, and keep the first run where delta(beta) =
// alpha. Throws Error(kRestartCapExceeded) after restart_cap iterations.
SimulatedView simulate(const ConjugacyStatement& statement, const VerifierProgram& program,
                       std::uint64_t r_seed, RandomTape& rng, SimulatorStats* stats = nullptr,
                       std::size_t restart_cap = kDefaultRestartCap);

// The honest prover against the program through the real protocol.
SimulatedView real_view(std::shared_ptr<const ConjugacyStatement> statement,
                        std::shared_ptr<const VerifierProgram> program, std::uint64_t r_seed,
                        RandomTape& prover_rng);

// (x, u) -> (x^u, beta, v^(1 - delta(beta)) u).
SimulatedView phi(const ConjugacyStatement& statement, const VerifierProgram& program,
                  std::uint64_t r_seed, std::span<const Permutation> x, const Permutation& u);

struct PhiPreimage {
  std::vector<Permutation> x;
  Permutation u;
  friend bool operator==(const PhiPreimage&, const PhiPreimage&) = default;
};

// u = v^(delta(beta) - 1) w, x_i = a_i^(u^-1).
PhiPreimage psi(const ConjugacyStatement& statement, const SimulatedView& view);

using PhiMap = std::function<SimulatedView(const ConjugacyStatement&, const VerifierProgram&,
                                           std::uint64_t, std::span<const Permutation>,
                                           const Permutation&)>;

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000;

// The view set S for tape r, enumerated over w in <U>, alpha and the
// commitments opening to alpha at w.
std::vector<SimulatedView> enumerate_view_set(const ConjugacyStatement& statement,
                                              const VerifierProgram& program,
                                              std::uint64_t r_seed,
                                              std::uint64_t cap = kDefaultEnumerationCap);

// phi maps (commitments opening to side 1 at identity) x <U> injectively
// onto S, and psi inverts it.
bool verify_phi_bijection(const ConjugacyStatement& statement, const VerifierProgram& program,
                          std::uint64_t r_seed, std::uint64_t cap = kDefaultEnumerationCap,
                          const PhiMap& map = phi);

using Probability = boost::rational<std::int64_t>;
using ViewLaw = std::map<SimulatedView, Probability>;

// Exact output laws for a fixed tape r, by enumerating each procedure's
// random choices.
ViewLaw exact_real_law(const ConjugacyStatement& statement, const VerifierProgram& program,
                       std::uint64_t r_seed, std::uint64_t cap = kDefaultEnumerationCap);
ViewLaw exact_simulated_law(const ConjugacyStatement& statement, const VerifierProgram& program,
                            std::uint64_t r_seed, std::uint64_t cap = kDefaultEnumerationCap);

struct ExactReport {
  std::size_t view_set_size = 0;
  bool bijection = false;
  bool real_uniform = false;
  bool simulated_uniform = false;
  bool laws_equal = false;
  bool ok() const { return bijection && real_uniform && simulated_uniform && laws_equal; }
};

// Throws Error(kPrecondition) without a witness: zero knowledge is only
// claimed on yes-instances.
ExactReport compare_exact(const ConjugacyStatement& statement, const VerifierProgram& program,
                          std::uint64_t r_seed, std::uint64_t cap = kDefaultEnumerationCap);

struct StatisticalReport {
  std::size_t samples = 0;
  double restarts_mean = 0;
  double attempts_per_iteration = 0;
  double chi2 = 0;
  std::size_t dof = 0;
  double chi2_p = 1;
  double tv_empirical = 0;
  double tv_upper = 0;
};

// Two-sample chi-square between `samples` simulated and real views,
// bucketed by (delta(beta), w, commitment hash mod buckets).
StatisticalReport compare_statistical(std::shared_ptr<const ConjugacyStatement> statement,
                                      std::shared_ptr<const VerifierProgram> program,
                                      std::uint64_t r_seed, std::size_t samples, RandomTape& rng,
                                      std::size_t hash_buckets = 8);

}  // namespace permzk
