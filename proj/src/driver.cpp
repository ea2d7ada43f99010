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

#include "permzk/driver.hpp"

#include <cmath>
#include <iomanip>
#include <memory>
#include <sstream>

#include "permzk/elem_conj.hpp"
#include "permzk/error.hpp"
#include "permzk/non_conj.hpp"
#include "permzk/simulator.hpp"

namespace permzk::driver {

ProtocolFamily parse_protocol_family(std::string_view name) {
  if (name == "group-conj") return ProtocolFamily::kGroupConj;
  if (name == "non-conj") return ProtocolFamily::kNonConj;
  if (name == "elem-conj") return ProtocolFamily::kElemConj;
  throw Error(ErrorCode::kInvalidArgument, "unknown protocol '" + std::string(name) + "'");
}

std::string_view protocol_family_name(ProtocolFamily family) {
  switch (family) {
    case ProtocolFamily::kGroupConj: return "group-conj";
    case ProtocolFamily::kNonConj: return "non-conj";
    case ProtocolFamily::kElemConj: return "elem-conj";
  }
  return "?";
}

Composition parse_composition(std::string_view name) {
  if (name.empty() || name == "default") return Composition::kDefault;
  if (name == "sequential") return Composition::kSequential;
  if (name == "parallel") return Composition::kParallel;
  throw Error(ErrorCode::kInvalidArgument, "unknown composition '" + std::string(name) + "'");
}

namespace {

std::string fixed(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << x;
  return os.str();
}

const GroupConjInstance& need_group(const InstanceFile& file, std::string_view what) {
  if (!file.group) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " needs a group instance (A0/A1/U)");
  }
  return *file.group;
}

const ElemConjInstance& need_element(const InstanceFile& file, std::string_view what) {
  if (!file.element) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " needs an element instance (a0/a1/U)");
  }
  return *file.element;
}

StrategyFactory conjugacy_factory(std::shared_ptr<const ConjugacyStatement> statement,
                                  const std::string& prover, const std::string& verifier) {
  if (prover != "honest" && prover != "guess" && prover != "malformed") {
    throw Error(ErrorCode::kInvalidArgument, "unknown prover '" + prover + "'");
  }
  if (prover == "honest" && !statement->witness()) {
    throw Error(ErrorCode::kPrecondition, "honest prover needs a yes-instance");
  }
  std::shared_ptr<const VerifierProgram> program;
  if (verifier != "honest") program = make_verifier_program(verifier);
  return [statement, prover, program]() {
    StrategyPair pair;
    if (prover == "honest") {
      pair.prover = std::make_unique<HonestProver>(statement);
    } else if (prover == "guess") {
      pair.prover = std::make_unique<GuessingProver>(statement);
    } else {
      pair.prover = std::make_unique<MalformedProver>(statement);
    }
    if (program) {
      pair.verifier = std::make_unique<ProgramVerifier>(statement, program);
    } else {
      pair.verifier = std::make_unique<HonestVerifier>(statement);
    }
    return pair;
  };
}

StrategyFactory non_conj_factory(std::shared_ptr<const NonConjContext> context,
                                 const std::string& prover, const std::string& verifier) {
  NonConjProverKind kind;
  if (prover == "honest" || prover == "brute") {
    kind = NonConjProverKind::kBruteForce;
  } else if (prover == "always0") {
    kind = NonConjProverKind::kAlways0;
  } else if (prover == "always1") {
    kind = NonConjProverKind::kAlways1;
  } else if (prover == "majority") {
    kind = NonConjProverKind::kMajority;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown non-conj prover '" + prover + "'");
  }
  if (verifier != "honest") {
    throw Error(ErrorCode::kInvalidArgument, "non-conj runs with the honest verifier only");
  }
  return [context, kind]() {
    return StrategyPair{std::make_unique<NonConjProver>(context, kind),
                        std::make_unique<NonConjVerifier>(context)};
  };
}

}  // namespace

CommandResult decide(const InstanceFile& file, std::uint64_t cap) {
  CommandResult result;
  std::ostringstream os;
  std::optional<Permutation> witness;
  if (file.group) {
    os << "problem=group-conjugacy\n";
    witness = find_group_conjugator(file.group->a0, file.group->a1, file.group->u, cap);
  } else if (file.element) {
    os << "problem=element-conjugacy\n";
    witness = find_elem_conjugator(file.element->a0, file.element->a1, file.element->u, cap);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "decide needs a conjugacy instance");
  }
  os << "answer=" << (witness ? "yes" : "no") << '\n';
  if (witness) os << "witness=" << format_perm(*witness) << '\n';
  result.exit_code = witness ? 0 : 1;
  result.report = os.str();
  return result;
}

CommandResult prove(const InstanceFile& file, const ProveConfig& config) {
  if (config.trials == 0) throw Error(ErrorCode::kInvalidArgument, "trials must be positive");
  RoundSchedule schedule;
  StrategyFactory factory;
  std::size_t rounds = config.rounds;
  std::size_t k = 0;
  Composition composition = config.composition;
  switch (config.protocol) {
    case ProtocolFamily::kGroupConj: {
      GroupConjInstance instance = need_group(file, "group-conj");
      if (config.prover == "honest") instance = with_witness(std::move(instance), config.cap);
      if (rounds == 0) rounds = input_bit_length(instance);
      auto statement = std::make_shared<const GroupStatement>(std::move(instance), config.k);
      k = statement->commitment_length();
      schedule = commit_challenge_response_schedule();
      factory = conjugacy_factory(statement, config.prover, config.verifier);
      if (composition == Composition::kDefault) composition = Composition::kSequential;
      break;
    }
    case ProtocolFamily::kElemConj: {
      ElemConjInstance instance = need_element(file, "elem-conj");
      if (config.prover == "honest") instance = with_witness(std::move(instance), config.cap);
      if (rounds == 0) rounds = input_bit_length(instance);
      auto statement = std::make_shared<const ElementStatement>(std::move(instance));
      k = 1;
      schedule = commit_challenge_response_schedule();
      factory = conjugacy_factory(statement, config.prover, config.verifier);
      if (composition == Composition::kDefault) composition = Composition::kSequential;
      break;
    }
    case ProtocolFamily::kNonConj: {
      auto context = std::make_shared<const NonConjContext>(need_group(file, "non-conj"),
                                                            config.k, config.cap);
      k = context->k();
      if (composition == Composition::kDefault) composition = Composition::kParallel;
      if (rounds == 0) rounds = composition == Composition::kParallel ? 2 : 1;
      schedule = challenge_answer_schedule();
      factory = non_conj_factory(context, config.prover, config.verifier);
      break;
    }
  }

  auto run = [&](RandomTape& rng) {
    return composition == Composition::kParallel ? run_parallel(schedule, factory, rounds, rng)
                                                 : run_sequential(schedule, factory, rounds, rng);
  };

  std::ostringstream os;
  os << "protocol=" << protocol_family_name(config.protocol) << '\n'
     << "composition=" << (composition == Composition::kParallel ? "parallel" : "sequential")
     << '\n'
     << "rounds=" << rounds << '\n'
     << "k=" << k << '\n'
     << "seed=" << config.seed << '\n'
     << "prover=" << config.prover << '\n'
     << "verifier=" << config.verifier << '\n';

  CommandResult result;
  RandomTape master(config.seed);
  if (config.trials == 1) {
    RandomTape rng(master.fork_seed());
    const auto outcome = run(rng);
    result.transcript = format_transcript(outcome);
    os << "accepted_sessions=" << outcome.accepted_sessions << '\n'
       << "verdict=" << (outcome.accepted ? "ACCEPT" : "REJECT") << '\n';
    result.exit_code = outcome.accepted ? 0 : 1;
  } else {
    std::size_t accepted = 0;
    for (std::size_t i = 0; i < config.trials; ++i) {
      RandomTape rng(master.fork_seed());
      if (run(rng).accepted) ++accepted;
    }
    const double rate = static_cast<double>(accepted) / static_cast<double>(config.trials);
    os << "trials=" << config.trials << '\n'
       << "accepted=" << accepted << '\n'
       << "rate=" << fixed(rate) << '\n';
    result.exit_code = 0;
  }
  result.report = os.str();
  return result;
}

namespace {

constexpr std::size_t kExactDefaultK = 2;

std::shared_ptr<const ConjugacyStatement> yes_statement(const InstanceFile& file,
                                                        const SimulateConfig& config) {
  if (file.group) {
    auto instance = with_witness(*file.group, config.cap);
    if (!instance.witness) {
      throw Error(ErrorCode::kPrecondition, "ZK claimed only on yes-instances");
    }
    // Exact enumeration is only feasible with very short tuples.
    const std::size_t k = config.k != 0 ? config.k : config.exact ? kExactDefaultK : 0;
    return std::make_shared<const GroupStatement>(std::move(instance), k);
  }
  if (file.element) {
    auto instance = with_witness(*file.element, config.cap);
    if (!instance.witness) {
      throw Error(ErrorCode::kPrecondition, "ZK claimed only on yes-instances");
    }
    return std::make_shared<const ElementStatement>(std::move(instance));
  }
  throw Error(ErrorCode::kInvalidArgument, "simulate needs a conjugacy instance");
}

double exact_tv(const ViewLaw& p, const ViewLaw& q) {
  Probability sum(0);
  for (const auto& [view, prob] : p) {
    auto it = q.find(view);
    const Probability d = it == q.end() ? prob : prob - it->second;
    sum += d < Probability(0) ? -d : d;
  }
  for (const auto& [view, prob] : q) {
    if (!p.count(view)) sum += prob;
  }
  return boost::rational_cast<double>(sum) / 2;
}

}  // namespace

CommandResult simulate(const InstanceFile& file, const SimulateConfig& config) {
  const auto statement = yes_statement(file, config);
  std::shared_ptr<const VerifierProgram> program = make_verifier_program(config.verifier);
  RandomTape master(config.seed);
  const std::uint64_t r_seed = master.fork_seed();

  std::ostringstream os;
  os << "verifier=" << config.verifier << '\n'
     << "k=" << statement->commitment_length() << '\n'
     << "seed=" << config.seed << '\n';
  CommandResult result;
  if (config.exact) {
    const auto report = compare_exact(*statement, *program, r_seed);
    const double tv = exact_tv(exact_real_law(*statement, *program, r_seed),
                               exact_simulated_law(*statement, *program, r_seed));
    os << "mode=exact\n"
       << "view_set_size=" << report.view_set_size << '\n'
       << "bijection=" << (report.bijection ? "OK" : "FAIL") << '\n'
       << "real_uniform=" << (report.real_uniform ? "OK" : "FAIL") << '\n'
       << "simulated_uniform=" << (report.simulated_uniform ? "OK" : "FAIL") << '\n'
       << "exact_equal=" << (report.laws_equal ? "OK" : "FAIL") << '\n'
       << "tv_distance_upper=" << fixed(tv) << '\n';
    result.exit_code = report.ok() ? 0 : 1;
  } else {
    const auto report =
        compare_statistical(statement, program, r_seed, config.samples, master);
    os << "mode=statistical\n"
       << "samples=" << report.samples << '\n'
       << "restarts_mean=" << fixed(report.restarts_mean) << '\n'
       << "attempts_per_restart=" << fixed(report.attempts_per_iteration) << '\n'
       << "chi2=" << fixed(report.chi2) << '\n'
       << "chi2_dof=" << report.dof << '\n'
       << "chi2_p=" << fixed(report.chi2_p) << '\n'
       << "tv_distance_empirical=" << fixed(report.tv_empirical) << '\n'
       << "tv_distance_upper=" << fixed(report.tv_upper) << '\n';
    result.exit_code = report.chi2_p > 1e-3 ? 0 : 1;
  }
  result.report = os.str();
  return result;
}

CommandResult genlemma(const InstanceFile& file, const GenLemmaConfig& config) {
  if (config.trials == 0) throw Error(ErrorCode::kInvalidArgument, "trials must be positive");
  const GeneratingSet* gens = nullptr;
  if (file.single) gens = &*file.single;
  if (file.group) gens = &file.group->a0;
  if (gens == nullptr) throw Error(ErrorCode::kInvalidArgument, "genlemma needs a group (A:)");
  const StabilizerChain group(*gens);
  const std::size_t m = gens->degree();
  const std::size_t k = config.k == 0 ? 4 * m : config.k;
  RandomTape rng(config.seed);
  std::size_t generated = 0;
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    std::vector<Permutation> tuple;
    for (std::size_t i = 0; i < k; ++i) tuple.push_back(group.random_element(rng));
    if (generates(tuple, group)) ++generated;
  }
  const double freq = static_cast<double>(generated) / static_cast<double>(config.trials);

  std::ostringstream os;
  os << "degree=" << m << '\n'
     << "group_order=" << group.order() << '\n'
     << "k=" << k << '\n'
     << "trials=" << config.trials << '\n'
     << "generated=" << generated << '\n'
     << "frequency=" << fixed(freq) << '\n';
  CommandResult result;
  if (k >= 8 * m) {
    const double bound = 1.0 - std::ldexp(1.0, -static_cast<int>(m));
    const bool pass = freq >= bound - 0.02;
    os << "bound=" << fixed(bound) << "\ntolerance=0.020000\nverdict=" << (pass ? "PASS" : "FAIL")
       << '\n';
    result.exit_code = pass ? 0 : 1;
  } else if (k >= 4 * m) {
    const bool pass = freq > 0.5;
    os << "bound=0.500000\ntolerance=0.000000\nverdict=" << (pass ? "PASS" : "FAIL") << '\n';
    result.exit_code = pass ? 0 : 1;
  } else {
    os << "bound=none\nverdict=NOBOUND\n";
    result.exit_code = 0;
  }
  result.report = os.str();
  return result;
}

}  // namespace permzk::driver
