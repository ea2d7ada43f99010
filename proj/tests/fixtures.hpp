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

// Shared helpers for locating the fixture corpus.

#pragma once

#include <string>

#include "permzk/instance.hpp"

namespace fixtures {

inline std::string path(const std::string& name) {
  return std::string(PERMZK_DATA_DIR) + "/" + name;
}

inline permzk::InstanceFile load(const std::string& name) {
  return permzk::load_instance(path(name));
}

inline permzk::GroupConjInstance group(const std::string& name) { return *load(name).group; }
inline permzk::ElemConjInstance element(const std::string& name) { return *load(name).element; }
inline permzk::GeneratingSet single(const std::string& name) { return *load(name).single; }

}  // namespace fixtures
