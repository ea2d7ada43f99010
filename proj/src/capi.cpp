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

#include "permzk/permzk.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "permzk/driver.hpp"
#include "permzk/error.hpp"
#include "permzk/group.hpp"
#include "permzk/instance.hpp"

struct permzk_instance {
  permzk::InstanceFile file;
};

struct permzk_group {
  permzk::StabilizerChain chain;
};

namespace {

thread_local std::string g_last_error;

permzk_status to_status(permzk::ErrorCode code) {
  using permzk::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return PERMZK_ERR_INVALID_ARGUMENT;
    case ErrorCode::kDegreeMismatch: return PERMZK_ERR_DEGREE_MISMATCH;
    case ErrorCode::kParse: return PERMZK_ERR_PARSE;
    case ErrorCode::kBudgetExceeded: return PERMZK_ERR_BUDGET_EXCEEDED;
    case ErrorCode::kSamplingFailed: return PERMZK_ERR_SAMPLING_FAILED;
    case ErrorCode::kPrecondition: return PERMZK_ERR_PRECONDITION;
    case ErrorCode::kRestartCapExceeded: return PERMZK_ERR_RESTART_CAP;
    case ErrorCode::kOverflow: return PERMZK_ERR_OVERFLOW;
  }
  return PERMZK_ERR_INTERNAL;
}

// Runs f, translating exceptions into a status and the thread's last error.
template <typename F>
permzk_status guarded(F&& f) {
  try {
    f();
    return PERMZK_OK;
  } catch (const permzk::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PERMZK_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return PERMZK_ERR_INTERNAL;
  }
}

permzk_status null_argument(const char* name) {
  g_last_error = std::string("null argument: ") + name;
  return PERMZK_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string or_default(const char* s, const char* fallback) { return s ? s : fallback; }

}  // namespace

extern "C" {

const char* permzk_version(void) { return "1.0.0"; }

const char* permzk_status_name(permzk_status status) {
  switch (status) {
    case PERMZK_OK: return "ok";
    case PERMZK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PERMZK_ERR_DEGREE_MISMATCH: return "degree mismatch";
    case PERMZK_ERR_PARSE: return "parse error";
    case PERMZK_ERR_BUDGET_EXCEEDED: return "budget exceeded";
    case PERMZK_ERR_SAMPLING_FAILED: return "sampling failed";
    case PERMZK_ERR_PRECONDITION: return "precondition violated";
    case PERMZK_ERR_RESTART_CAP: return "restart cap exceeded";
    case PERMZK_ERR_OVERFLOW: return "overflow";
    case PERMZK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* permzk_last_error(void) { return g_last_error.c_str(); }

void permzk_string_free(char* s) { std::free(s); }

permzk_status permzk_instance_load(const char* path, permzk_instance** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new permzk_instance{permzk::load_instance(path)}; });
}

permzk_status permzk_instance_parse(const char* text, permzk_instance** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new permzk_instance{permzk::parse_instance(text)}; });
}

void permzk_instance_free(permzk_instance* instance) { delete instance; }

permzk_status permzk_instance_kind_of(const permzk_instance* instance,
                                      permzk_instance_kind* out) {
  if (!instance) return null_argument("instance");
  if (!out) return null_argument("out");
  switch (instance->file.kind) {
    case permzk::InstanceKind::kGroup: *out = PERMZK_INSTANCE_GROUP; break;
    case permzk::InstanceKind::kElement: *out = PERMZK_INSTANCE_ELEMENT; break;
    case permzk::InstanceKind::kSingleGroup: *out = PERMZK_INSTANCE_SINGLE_GROUP; break;
  }
  return PERMZK_OK;
}

permzk_status permzk_instance_format(const permzk_instance* instance, char** out) {
  if (!instance) return null_argument("instance");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& f = instance->file;
    if (f.group) {
      *out = dup_string(permzk::format_instance(*f.group));
    } else if (f.element) {
      *out = dup_string(permzk::format_instance(*f.element));
    } else {
      *out = dup_string("degree: " + std::to_string(f.single->degree()) +
                        "\nA: " + permzk::format_generating_set(*f.single) + "\n");
    }
  });
}

permzk_status permzk_group_create(size_t degree, const char* generators, permzk_group** out) {
  if (!generators) return null_argument("generators");
  if (!out) return null_argument("out");
  return guarded([&] {
    if (degree == 0) {
      throw permzk::Error(permzk::ErrorCode::kInvalidArgument, "degree must be positive");
    }
    *out = new permzk_group{
        permzk::StabilizerChain(permzk::parse_generating_set(degree, generators))};
  });
}

void permzk_group_free(permzk_group* group) { delete group; }

permzk_status permzk_group_order(const permzk_group* group, uint64_t* out) {
  if (!group) return null_argument("group");
  if (!out) return null_argument("out");
  return guarded([&] { *out = group->chain.order(); });
}

permzk_status permzk_group_contains(const permzk_group* group, const char* perm, int* out) {
  if (!group) return null_argument("group");
  if (!perm) return null_argument("perm");
  if (!out) return null_argument("out");
  return guarded([&] { *out = group->chain.contains(permzk::parse_perm(perm)) ? 1 : 0; });
}

permzk_status permzk_group_equal(const permzk_group* a, const permzk_group* b, int* out) {
  if (!a || !b) return null_argument("group");
  if (!out) return null_argument("out");
  return guarded([&] { *out = permzk::group_equal(a->chain, b->chain) ? 1 : 0; });
}

permzk_status permzk_group_random_element(const permzk_group* group, uint64_t seed, char** out) {
  if (!group) return null_argument("group");
  if (!out) return null_argument("out");
  return guarded([&] {
    permzk::RandomTape rng(seed);
    *out = dup_string(permzk::format_perm(group->chain.random_element(rng)));
  });
}

permzk_status permzk_decide(const permzk_instance* instance, uint64_t cap, int* exit_code,
                            char** report) {
  if (!instance) return null_argument("instance");
  if (!exit_code || !report) return null_argument("out");
  return guarded([&] {
    const auto r = permzk::driver::decide(
        instance->file, cap != 0 ? cap : permzk::kDefaultProverCap);
    *report = dup_string(r.report);
    *exit_code = r.exit_code;
  });
}

void permzk_prove_options_init(permzk_prove_options* o) {
  if (!o) return;
  o->protocol = "group-conj";
  o->composition = "default";
  o->rounds = 0;
  o->k = 0;
  o->seed = 1;
  o->prover = "honest";
  o->verifier = "honest";
  o->trials = 1;
  o->cap = permzk::kDefaultProverCap;
}

permzk_status permzk_prove(const permzk_instance* instance, const permzk_prove_options* options,
                           int* exit_code, char** report, char** transcript) {
  if (!instance) return null_argument("instance");
  if (!options) return null_argument("options");
  if (!exit_code || !report || !transcript) return null_argument("out");
  return guarded([&] {
    permzk::driver::ProveConfig c;
    c.protocol = permzk::driver::parse_protocol_family(or_default(options->protocol, "group-conj"));
    c.composition = permzk::driver::parse_composition(or_default(options->composition, "default"));
    c.rounds = options->rounds;
    c.k = options->k;
    c.seed = options->seed;
    c.prover = or_default(options->prover, "honest");
    c.verifier = or_default(options->verifier, "honest");
    c.trials = options->trials;
    c.cap = options->cap != 0 ? options->cap : permzk::kDefaultProverCap;
    const auto r = permzk::driver::prove(instance->file, c);
    char* rep = dup_string(r.report);
    try {
      *transcript = dup_string(r.transcript);
    } catch (...) {
      std::free(rep);
      throw;
    }
    *report = rep;
    *exit_code = r.exit_code;
  });
}

void permzk_simulate_options_init(permzk_simulate_options* o) {
  if (!o) return;
  o->seed = 1;
  o->verifier = "honest";
  o->exact = 0;
  o->samples = 1000;
  o->k = 0;
  o->cap = permzk::kDefaultProverCap;
}

permzk_status permzk_simulate(const permzk_instance* instance,
                              const permzk_simulate_options* options, int* exit_code,
                              char** report) {
  if (!instance) return null_argument("instance");
  if (!options) return null_argument("options");
  if (!exit_code || !report) return null_argument("out");
  return guarded([&] {
    permzk::driver::SimulateConfig c;
    c.seed = options->seed;
    c.verifier = or_default(options->verifier, "honest");
    c.exact = options->exact != 0;
    c.samples = options->samples;
    c.k = options->k;
    c.cap = options->cap != 0 ? options->cap : permzk::kDefaultProverCap;
    const auto r = permzk::driver::simulate(instance->file, c);
    *report = dup_string(r.report);
    *exit_code = r.exit_code;
  });
}

void permzk_genlemma_options_init(permzk_genlemma_options* o) {
  if (!o) return;
  o->k = 0;
  o->trials = 1000;
  o->seed = 1;
}

permzk_status permzk_genlemma(const permzk_instance* instance,
                              const permzk_genlemma_options* options, int* exit_code,
                              char** report) {
  if (!instance) return null_argument("instance");
  if (!options) return null_argument("options");
  if (!exit_code || !report) return null_argument("out");
  return guarded([&] {
    permzk::driver::GenLemmaConfig c;
    c.k = options->k;
    c.trials = options->trials;
    c.seed = options->seed;
    const auto r = permzk::driver::genlemma(instance->file, c);
    *report = dup_string(r.report);
    *exit_code = r.exit_code;
  });
}

}  // extern "C"
