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

#include "permzk/group.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "permzk/error.hpp"

namespace permzk {

GeneratingSet::GeneratingSet(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ == 0) throw Error(ErrorCode::kInvalidArgument, "degree must be positive");
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw Error(ErrorCode::kDegreeMismatch, "generator of degree " + std::to_string(g.degree()) +
                                                  " in a set of degree " + std::to_string(degree_));
    }
  }
}

GeneratingSet GeneratingSet::canonical() const {
  std::vector<Permutation> gens;
  for (const auto& g : generators_) {
    if (!g.is_identity()) gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return GeneratingSet(degree_, std::move(gens));
}

std::string format_generating_set(const GeneratingSet& set) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out.push_back(';');
    out += format_perm(set.generators()[i]);
  }
  return out;
}

GeneratingSet parse_generating_set(std::size_t degree, std::string_view text) {
  std::vector<Permutation> gens;
  const bool blank = text.find_first_not_of(" \t") == std::string_view::npos;
  if (!blank) {
    std::size_t pos = 0;
    for (;;) {
      const std::size_t end = text.find(';', pos);
      const std::string_view item =
          text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      Permutation p = parse_perm(item);
      if (p.degree() != degree) {
        throw Error(ErrorCode::kParse, "permutation '" + std::string(item) + "' has degree " +
                                           std::to_string(p.degree()) + ", expected " +
                                           std::to_string(degree));
      }
      gens.push_back(std::move(p));
      if (end == std::string_view::npos) break;
      pos = end + 1;
    }
  }
  return GeneratingSet(degree, std::move(gens));
}

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(const GeneratingSet& generators)
    : degree_(generators.degree()), generators_(generators) {
  schreier_sims();
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base);
  level.rep_index.assign(degree_, -1);
  level.reps.assign(1, Permutation::identity(degree_));
  level.rep_index[level.base] = 0;
  for (std::size_t j = 0; j < level.orbit.size(); ++j) {
    const Point from = level.orbit[j];
    for (const auto& s : level.generators) {
      const Point to = s[from];
      if (level.rep_index[to] >= 0) continue;
      level.rep_index[to] = static_cast<std::int32_t>(level.reps.size());
      level.reps.push_back(compose(level.reps[j], s));
      level.orbit.push_back(to);
    }
  }
}

const Permutation* StabilizerChain::representative(const Level& level, Point point) const {
  const std::int32_t idx = level.rep_index[point];
  return idx < 0 ? nullptr : &level.reps[static_cast<std::size_t>(idx)];
}

Permutation StabilizerChain::sift(const Permutation& y, std::size_t from_level,
                                  std::size_t* stopped_at) const {
  if (y.degree() != degree_) {
    throw Error(ErrorCode::kDegreeMismatch, "element of degree " + std::to_string(y.degree()) +
                                                " sifted through a chain of degree " +
                                                std::to_string(degree_));
  }
  Permutation g = y;
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    const Permutation* rep = representative(level, g[level.base]);
    if (rep == nullptr) {
      if (stopped_at) *stopped_at = i;
      return g;
    }
    g = compose(g, inverse(*rep));
  }
  if (stopped_at) *stopped_at = levels_.size();
  return g;
}

void StabilizerChain::schreier_sims() {
  const GeneratingSet gens = generators_.canonical();
  if (gens.empty()) return;

  // Initial base: for each generator fixing all base points so far, its
  // smallest moved point.
  std::vector<Point> base;
  for (const auto& g : gens.generators()) {
    const bool fixes_base =
        std::all_of(base.begin(), base.end(), [&](Point b) { return g[b] == b; });
    if (fixes_base) base.push_back(g.first_moved_point() - 1);
  }
  levels_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    levels_[i].base = base[i];
    for (const auto& g : gens.generators()) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = g[base[j]] == base[j];
      if (fixes) levels_[i].generators.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }

  // Work bottom-up: a level is complete once every Schreier generator sifts
  // through the (already complete) levels below it.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < levels_[li].orbit.size() && !extended; ++j) {
      for (std::size_t s = 0; s < levels_[li].generators.size() && !extended; ++s) {
        const Level& level = levels_[li];
        const Permutation& gen = level.generators[s];
        const Point image = gen[level.orbit[j]];
        Permutation schreier =
            compose(compose(level.reps[j], gen), inverse(*representative(level, image)));
        if (schreier.is_identity()) continue;
        std::size_t stopped = 0;
        Permutation residue = sift(schreier, li + 1, &stopped);
        if (residue.is_identity()) continue;
        if (stopped == levels_.size()) {
          Level fresh;
          fresh.base = residue.first_moved_point() - 1;
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = li + 1; l <= stopped; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(stopped);
        extended = true;
      }
    }
    if (!extended) --i;
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& level : levels_) out.push_back(level.base + 1);
  return out;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& level : levels_) {
    for (const auto& g : level.generators) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  }
  return out;
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t n = 1;
  for (const auto& level : levels_) {
    const std::uint64_t s = level.orbit.size();
    if (n > std::numeric_limits<std::uint64_t>::max() / s) {
      throw Error(ErrorCode::kOverflow, "group order exceeds 64 bits");
    }
    n *= s;
  }
  return n;
}

bool StabilizerChain::contains(const Permutation& y) const { return sift(y).is_identity(); }

Permutation StabilizerChain::random_element(RandomTape& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const Level& level = levels_[l];
    g = compose(g, level.reps[rng.uniform_below(level.reps.size())]);
  }
  return g;
}

std::vector<Permutation> StabilizerChain::elements(std::uint64_t cap) const {
  if (order() > cap) {
    throw Error(ErrorCode::kBudgetExceeded, "group of order " + std::to_string(order()) +
                                                " exceeds enumeration cap " + std::to_string(cap));
  }
  std::vector<Permutation> out{Permutation::identity(degree_)};
  // Elements are products rep_{d-1} * ... * rep_0; extend level by level
  // from the deepest one.
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[l].reps.size());
    for (const auto& g : out) {
      for (const auto& rep : levels_[l].reps) next.push_back(compose(g, rep));
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

bool group_equal(const StabilizerChain& x, const StabilizerChain& y) {
  if (x.degree() != y.degree()) {
    throw Error(ErrorCode::kDegreeMismatch, "group_equal on different degrees");
  }
  for (const auto& g : x.generators().generators()) {
    if (!y.contains(g)) return false;
  }
  for (const auto& g : y.generators().generators()) {
    if (!x.contains(g)) return false;
  }
  return true;
}

bool group_equal(const GeneratingSet& x, const GeneratingSet& y) {
  return group_equal(StabilizerChain(x), StabilizerChain(y));
}

GeneratingSet conjugate_set(const GeneratingSet& set, const Permutation& v) {
  if (v.degree() != set.degree()) {
    throw Error(ErrorCode::kDegreeMismatch, "conjugate_set on different degrees");
  }
  std::vector<Permutation> out;
  out.reserve(set.size());
  for (const auto& g : set.generators()) out.push_back(conjugate(g, v));
  return GeneratingSet(set.degree(), std::move(out));
}

bool generates(std::span<const Permutation> tuple, const StabilizerChain& target) {
  for (const auto& x : tuple) {
    if (x.degree() != target.degree()) {
      throw Error(ErrorCode::kDegreeMismatch, "tuple element of wrong degree");
    }
    if (!target.contains(x)) return false;
  }
  const StabilizerChain sub(GeneratingSet(target.degree(), {tuple.begin(), tuple.end()}));
  return sub.order() == target.order();
}

GeneratingTuple random_generating_tuple(const StabilizerChain& target, std::size_t k,
                                        RandomTape& rng, std::size_t max_attempts) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "tuple length must be positive");
  GeneratingTuple result{{}, target.generators(), 0};
  while (result.attempts < max_attempts) {
    ++result.attempts;
    result.tuple.clear();
    for (std::size_t i = 0; i < k; ++i) result.tuple.push_back(target.random_element(rng));
    if (generates(result.tuple, target)) return result;
  }
  throw Error(ErrorCode::kSamplingFailed,
              "no generating " + std::to_string(k) + "-tuple in " + std::to_string(max_attempts) +
                  " attempts; k is too small for this group");
}

std::vector<Permutation> enumerate_elements(const StabilizerChain& chain, std::uint64_t cap) {
  return chain.elements(cap);
}

std::vector<std::vector<Permutation>> enumerate_generating_tuples(const StabilizerChain& target,
                                                                  std::size_t k,
                                                                  std::uint64_t cap) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "tuple length must be positive");
  const std::uint64_t n = target.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > cap / n) {
      throw Error(ErrorCode::kBudgetExceeded, "tuple space exceeds enumeration cap");
    }
    total *= n;
  }
  const auto elems = target.elements(cap);
  std::vector<std::vector<Permutation>> out;
  std::vector<std::size_t> digits(k, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Permutation> tuple;
    tuple.reserve(k);
    for (std::size_t d : digits) tuple.push_back(elems[d]);
    if (generates(tuple, target)) out.push_back(std::move(tuple));
    for (std::size_t pos = k; pos-- > 0;) {
      if (++digits[pos] < elems.size()) break;
      digits[pos] = 0;
    }
  }
  return out;
}

GeneratingSet centralizer_in_sym(const Permutation& x) {
  const std::size_t m = x.degree();
  const auto cyc = cycles(x);
  std::vector<Permutation> gens;
  for (const auto& c : cyc) {
    if (c.size() < 2) continue;
    std::vector<Point> images = Permutation::identity(m).one_line();
    for (std::size_t i = 0; i < c.size(); ++i) images[c[i] - 1] = c[(i + 1) % c.size()];
    gens.push_back(Permutation::from_images(images));
  }
  // cycles() orders by length, so equal-length cycles are adjacent.
  for (std::size_t j = 0; j + 1 < cyc.size(); ++j) {
    const auto& a = cyc[j];
    const auto& b = cyc[j + 1];
    if (a.size() != b.size()) continue;
    std::vector<Point> images = Permutation::identity(m).one_line();
    for (std::size_t i = 0; i < a.size(); ++i) {
      images[a[i] - 1] = b[i];
      images[b[i] - 1] = a[i];
    }
    gens.push_back(Permutation::from_images(images));
  }
  return GeneratingSet(m, std::move(gens));
}

std::uint64_t centralizer_order(const Permutation& x) {
  std::vector<std::uint64_t> count(x.degree() + 1, 0);
  for (std::size_t len : cycle_type(x)) ++count[len];
  std::uint64_t n = 1;
  for (std::size_t d = 1; d < count.size(); ++d) {
    for (std::uint64_t i = 1; i <= count[d]; ++i) {
      if (n > std::numeric_limits<std::uint64_t>::max() / (i * d)) {
        throw Error(ErrorCode::kOverflow, "centralizer order exceeds 64 bits");
      }
      n *= i * d;
    }
  }
  return n;
}

}  // namespace permzk
