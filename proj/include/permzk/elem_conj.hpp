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

#include <cstdint>
#include <optional>

#include "permzk/group_conj.hpp"
#include "permzk/instance.hpp"

namespace permzk {

// Element conjugacy: a commitment is the single element a_side^w, so no
// tuple sampling is involved.
class ElementStatement final : public ConjugacyStatement {
 public:
  explicit ElementStatement(ElemConjInstance instance);

  const ElemConjInstance& instance() const noexcept { return instance_; }

  std::size_t degree() const override { return instance_.degree; }
  std::size_t commitment_length() const override { return 1; }
  const StabilizerChain& mask_group() const override { return mask_; }
  const std::optional<Permutation>& witness() const override { return instance_.witness; }

  std::vector<Permutation> commit(int side, const Permutation& w, RandomTape& rng,
                                  std::size_t* attempts = nullptr) const override;
  bool opens_to(std::span<const Permutation> commitment, int side,
                const Permutation& w) const override;
  std::vector<std::vector<Permutation>> enumerate_commitments(int side, const Permutation& w,
                                                              std::uint64_t cap) const override;

 private:
  const Permutation& side_element(int side) const { return side ? instance_.a1 : instance_.a0; }

  ElemConjInstance instance_;
  StabilizerChain mask_;
};

// First v in enumeration order of <U> with a0^v = a1.
std::optional<Permutation> find_elem_conjugator(const Permutation& a0, const Permutation& a1,
                                                const GeneratingSet& u,
                                                std::uint64_t cap = kDefaultProverCap);

ElemConjInstance with_witness(ElemConjInstance instance, std::uint64_t cap = kDefaultProverCap);

// The honest three-round session for element conjugacy.
SessionOutcome ec_protocol_session(std::shared_ptr<const ElementStatement> statement,
                                   ProverStrategy& prover, RandomTape& prover_tape,
                                   RandomTape& verifier_tape);

// nullopt when a0 and a1 are not even conjugate in S_m (answer NO).
// Otherwise (x = a0, y = s^-1, U) with a1 = a0^s; the answers coincide.
std::optional<CciInstance> ec_to_cci(const ElemConjInstance& instance);

// (a0 = x, a1 = y x y^-1, U); the answers coincide.
ElemConjInstance cci_to_ec(const CciInstance& instance);

// Exhaustive: does C(x) meet <U>y?
bool brute_cci(const CciInstance& instance, std::uint64_t cap = kDefaultProverCap);

}  // namespace permzk
