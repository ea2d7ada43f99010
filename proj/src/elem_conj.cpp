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

#include "permzk/elem_conj.hpp"

#include <set>

#include "permzk/error.hpp"

namespace permzk {

ElementStatement::ElementStatement(ElemConjInstance instance)
    : instance_(std::move(instance)), mask_(instance_.u) {
  if (instance_.a0.degree() != instance_.degree || instance_.a1.degree() != instance_.degree ||
      instance_.u.degree() != instance_.degree) {
    throw Error(ErrorCode::kDegreeMismatch, "instance elements disagree on the degree");
  }
}

std::vector<Permutation> ElementStatement::commit(int side, const Permutation& w, RandomTape&,
                                                  std::size_t*) const {
  return {conjugate(side_element(side), w)};
}

bool ElementStatement::opens_to(std::span<const Permutation> commitment, int side,
                                const Permutation& w) const {
  return commitment.size() == 1 && commitment[0] == conjugate(side_element(side), w);
}

std::vector<std::vector<Permutation>> ElementStatement::enumerate_commitments(
    int side, const Permutation& w, std::uint64_t) const {
  return {{conjugate(side_element(side), w)}};
}

std::optional<Permutation> find_elem_conjugator(const Permutation& a0, const Permutation& a1,
                                                const GeneratingSet& u, std::uint64_t cap) {
  for (const auto& v : StabilizerChain(u).elements(cap)) {
    if (conjugate(a0, v) == a1) return v;
  }
  return std::nullopt;
}

ElemConjInstance with_witness(ElemConjInstance instance, std::uint64_t cap) {
  if (!instance.witness) {
    instance.witness = find_elem_conjugator(instance.a0, instance.a1, instance.u, cap);
  }
  return instance;
}

SessionOutcome ec_protocol_session(std::shared_ptr<const ElementStatement> statement,
                                   ProverStrategy& prover, RandomTape& prover_tape,
                                   RandomTape& verifier_tape) {
  HonestVerifier verifier(statement);
  return run_session(commit_challenge_response_schedule(), prover, verifier, prover_tape,
                     verifier_tape);
}

std::optional<CciInstance> ec_to_cci(const ElemConjInstance& instance) {
  const auto s = conjugator_in_sym(instance.a0, instance.a1);
  if (!s) return std::nullopt;
  return CciInstance{instance.a0, inverse(*s), instance.u};
}

ElemConjInstance cci_to_ec(const CciInstance& instance) {
  const Permutation a1 = compose(compose(instance.y, instance.x), inverse(instance.y));
  return ElemConjInstance{instance.x.degree(), instance.x, a1, instance.u, std::nullopt};
}

bool brute_cci(const CciInstance& instance, std::uint64_t cap) {
  const auto cent = StabilizerChain(centralizer_in_sym(instance.x)).elements(cap);
  const std::set<Permutation> centralizer(cent.begin(), cent.end());
  for (const auto& u : StabilizerChain(instance.u).elements(cap)) {
    if (centralizer.count(compose(u, instance.y))) return true;
  }
  return false;
}

}  // namespace permzk
