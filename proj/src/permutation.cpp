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

#include "permzk/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "permzk/error.hpp"

namespace permzk {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kDegreeMismatch: return "degree mismatch";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kBudgetExceeded: return "prover budget exceeded";
    case ErrorCode::kSamplingFailed: return "sampling attempts exhausted";
    case ErrorCode::kPrecondition: return "precondition violated";
    case ErrorCode::kRestartCapExceeded: return "simulator restart cap exceeded";
    case ErrorCode::kOverflow: return "arithmetic overflow";
  }
  return "unknown error";
}

namespace {

void require_same_degree(const Permutation& a, const Permutation& b, const char* op) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::kDegreeMismatch,
                std::string(op) + ": degrees " + std::to_string(a.degree()) + " and " +
                    std::to_string(b.degree()));
  }
}

}  // namespace

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw Error(ErrorCode::kInvalidArgument, "degree must be positive");
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  return Permutation(std::move(images));
}

std::optional<Permutation> Permutation::try_from_images(std::span<const Point> images) {
  if (images.empty()) return std::nullopt;
  const std::size_t m = images.size();
  std::vector<char> seen(m, 0);
  std::vector<Point> zero_based(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Point p = images[i];
    if (p < 1 || p > m || seen[p - 1]) return std::nullopt;
    seen[p - 1] = 1;
    zero_based[i] = p - 1;
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_images(std::span<const Point> images) {
  auto p = try_from_images(images);
  if (!p) throw Error(ErrorCode::kParse, "not a bijection of {1..m}");
  return *std::move(p);
}

Permutation Permutation::from_images(std::initializer_list<Point> images) {
  return from_images(std::span<const Point>(images.begin(), images.size()));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  Permutation result = identity(degree);
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    std::vector<Point> pts(cycle);
    for (Point p : pts) {
      if (p < 1 || p > degree || used[p - 1]) {
        throw Error(ErrorCode::kInvalidArgument, "cycles are not disjoint points of {1..m}");
      }
      used[p - 1] = 1;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      result.images_[pts[i] - 1] = pts[(i + 1) % pts.size()] - 1;
    }
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Point Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i + 1);
  }
  return 0;
}

std::vector<Point> Permutation::one_line() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b, "compose");
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = b.images_[a.images_[i]];
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& a) {
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[a.images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out));
}

Permutation conjugate(const Permutation& y, const Permutation& v) {
  require_same_degree(y, v, "conjugate");
  std::vector<Point> out(y.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[v.images_[i]] = v.images_[y.images_[i]];
  return Permutation(std::move(out));
}

std::vector<std::vector<Point>> cycles(const Permutation& a) {
  const std::size_t m = a.degree();
  std::vector<char> seen(m, 0);
  std::vector<std::vector<Point>> out;
  for (std::size_t start = 0; start < m; ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    for (std::size_t p = start; !seen[p]; p = a[p]) {
      seen[p] = 1;
      cycle.push_back(static_cast<Point>(p + 1));
    }
    out.push_back(std::move(cycle));
  }
  // Each cycle already starts at its smallest point; a stable sort on length
  // keeps the smallest-point order within a length class.
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

CycleType cycle_type(const Permutation& a) {
  CycleType type;
  for (const auto& c : cycles(a)) type.push_back(c.size());
  std::sort(type.begin(), type.end());
  return type;
}

std::optional<Permutation> conjugator_in_sym(const Permutation& a0, const Permutation& a1) {
  require_same_degree(a0, a1, "conjugator_in_sym");
  auto c0 = cycles(a0);
  auto c1 = cycles(a1);
  if (c0.size() != c1.size()) return std::nullopt;
  std::vector<Point> images(a0.degree());
  for (std::size_t j = 0; j < c0.size(); ++j) {
    if (c0[j].size() != c1[j].size()) return std::nullopt;
    for (std::size_t i = 0; i < c0[j].size(); ++i) images[c0[j][i] - 1] = c1[j][i];
  }
  return Permutation::from_images(images);
}

std::string format_perm(const Permutation& a) {
  std::string out;
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(a[i] + 1);
  }
  return out;
}

std::vector<Point> parse_images(std::string_view text) {
  std::vector<Point> images;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    const std::string_view token = text.substr(pos, end - pos);
    if (token.size() > 1 && token[0] == '0') {
      throw Error(ErrorCode::kParse, "leading zero in '" + std::string(token) + "'");
    }
    Point value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kParse, "not a point: '" + std::string(token) + "'");
    }
    images.push_back(value);
    pos = end;
  }
  if (images.empty()) throw Error(ErrorCode::kParse, "empty permutation text");
  return images;
}

Permutation parse_perm(std::string_view text) {
  const auto images = parse_images(text);
  auto p = Permutation::try_from_images(images);
  if (!p) throw Error(ErrorCode::kParse, "not a bijection: '" + std::string(text) + "'");
  return *std::move(p);
}

std::string cycle_string(const Permutation& a) {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles(a)) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return any ? os.str() : "()";
}

std::uint64_t hash_value(const Permutation& a) noexcept {
  // FNV-1a over the image words; stable across runs and platforms.
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < a.degree(); ++i) {
    std::uint32_t v = a[i];
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

}  // namespace permzk
