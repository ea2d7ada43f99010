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

#include "permzk/instance.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "permzk/error.hpp"

namespace permzk {

bool certifies(const GroupConjInstance& instance, const Permutation& v) {
  if (v.degree() != instance.degree) return false;
  if (!StabilizerChain(instance.u).contains(v)) return false;
  return group_equal(instance.a1, conjugate_set(instance.a0, v));
}

bool certifies(const ElemConjInstance& instance, const Permutation& v) {
  if (v.degree() != instance.degree) return false;
  if (!StabilizerChain(instance.u).contains(v)) return false;
  return conjugate(instance.a0, v) == instance.a1;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

struct Field {
  std::string value;
  std::size_t line;
};

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  static const char* const kKeys[] = {"degree", "A0", "A1", "U", "witness", "a0", "a1", "A"};
  std::map<std::string, Field> fields;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(line_no, "expected 'key: value'");
    const std::string key(trim(line.substr(0, colon)));
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) fail(line_no, "unknown key '" + key + "'");
    if (fields.count(key)) fail(line_no, "duplicate key '" + key + "'");
    fields[key] = Field{std::string(trim(line.substr(colon + 1))), line_no};
  }

  auto it = fields.find("degree");
  if (it == fields.end()) throw Error(ErrorCode::kParse, "missing 'degree'");
  std::size_t degree = 0;
  {
    const auto& v = it->second.value;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), degree);
    if (ec != std::errc() || ptr != v.data() + v.size() || degree == 0) {
      fail(it->second.line, "degree must be a positive integer");
    }
  }

  auto gens = [&](const char* key) -> std::optional<GeneratingSet> {
    auto f = fields.find(key);
    if (f == fields.end()) return std::nullopt;
    try {
      return parse_generating_set(degree, f->second.value);
    } catch (const Error& e) {
      fail(f->second.line, std::string(key) + ": " + e.what());
    }
  };
  auto perm = [&](const char* key) -> std::optional<Permutation> {
    auto f = fields.find(key);
    if (f == fields.end()) return std::nullopt;
    std::optional<Permutation> p;
    try {
      p = parse_perm(f->second.value);
    } catch (const Error& e) {
      fail(f->second.line, std::string(key) + ": " + e.what());
    }
    if (p->degree() != degree) fail(f->second.line, std::string(key) + ": wrong degree");
    return p;
  };
  auto line_of = [&](const char* key) { return fields.at(key).line; };

  const bool has_group = fields.count("A0") || fields.count("A1");
  const bool has_element = fields.count("a0") || fields.count("a1");
  const bool has_single = fields.count("A") != 0;
  if (int(has_group) + int(has_element) + int(has_single) != 1) {
    throw Error(ErrorCode::kParse, "expected exactly one of A0/A1, a0/a1 or A");
  }

  InstanceFile file;
  if (has_single) {
    file.kind = InstanceKind::kSingleGroup;
    file.single = gens("A");
    return file;
  }
  if (!fields.count("U")) throw Error(ErrorCode::kParse, "missing 'U'");
  const auto witness = perm("witness");
  if (has_group) {
    if (!fields.count("A0") || !fields.count("A1")) {
      throw Error(ErrorCode::kParse, "group instance needs both A0 and A1");
    }
    file.kind = InstanceKind::kGroup;
    file.group = GroupConjInstance{degree, *gens("A0"), *gens("A1"), *gens("U"), witness};
    if (witness && !certifies(*file.group, *witness)) {
      fail(line_of("witness"), "witness does not conjugate <A0> onto <A1> within <U>");
    }
  } else {
    if (!fields.count("a0") || !fields.count("a1")) {
      throw Error(ErrorCode::kParse, "element instance needs both a0 and a1");
    }
    file.kind = InstanceKind::kElement;
    file.element = ElemConjInstance{degree, *perm("a0"), *perm("a1"), *gens("U"), witness};
    if (witness && !certifies(*file.element, *witness)) {
      fail(line_of("witness"), "witness does not conjugate a0 onto a1 within <U>");
    }
  }
  return file;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open instance file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_instance(os.str());
}

namespace {

std::string serialize(const GroupConjInstance& x, bool with_witness) {
  std::ostringstream os;
  os << "degree: " << x.degree << '\n'
     << "A0: " << format_generating_set(x.a0) << '\n'
     << "A1: " << format_generating_set(x.a1) << '\n'
     << "U: " << format_generating_set(x.u) << '\n';
  if (with_witness && x.witness) os << "witness: " << format_perm(*x.witness) << '\n';
  return os.str();
}

std::string serialize(const ElemConjInstance& x, bool with_witness) {
  std::ostringstream os;
  os << "degree: " << x.degree << '\n'
     << "a0: " << format_perm(x.a0) << '\n'
     << "a1: " << format_perm(x.a1) << '\n'
     << "U: " << format_generating_set(x.u) << '\n';
  if (with_witness && x.witness) os << "witness: " << format_perm(*x.witness) << '\n';
  return os.str();
}

}  // namespace

std::string format_instance(const GroupConjInstance& instance) { return serialize(instance, true); }
std::string format_instance(const ElemConjInstance& instance) { return serialize(instance, true); }

std::size_t input_bit_length(const GroupConjInstance& instance) {
  return 8 * serialize(instance, false).size();
}
std::size_t input_bit_length(const ElemConjInstance& instance) {
  return 8 * serialize(instance, false).size();
}

}  // namespace permzk
