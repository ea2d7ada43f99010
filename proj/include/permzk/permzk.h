/*
 * Copyright 2026 The permzk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PERMZK_PERMZK_H_
#define PERMZK_PERMZK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PERMZK_BUILDING_LIBRARY)
#    define PERMZK_API __declspec(dllexport)
#  else
#    define PERMZK_API __declspec(dllimport)
#  endif
#else
#  define PERMZK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns a status; on failure permzk_last_error()
 * holds a message for the calling thread until its next failing call. */
typedef enum permzk_status {
  PERMZK_OK = 0,
  PERMZK_ERR_INVALID_ARGUMENT = 1,
  PERMZK_ERR_DEGREE_MISMATCH = 2,
  PERMZK_ERR_PARSE = 3,
  PERMZK_ERR_BUDGET_EXCEEDED = 4,
  PERMZK_ERR_SAMPLING_FAILED = 5,
  PERMZK_ERR_PRECONDITION = 6,
  PERMZK_ERR_RESTART_CAP = 7,
  PERMZK_ERR_OVERFLOW = 8,
  PERMZK_ERR_INTERNAL = 99
} permzk_status;

typedef enum permzk_instance_kind {
  PERMZK_INSTANCE_GROUP = 0,
  PERMZK_INSTANCE_ELEMENT = 1,
  PERMZK_INSTANCE_SINGLE_GROUP = 2
} permzk_instance_kind;

typedef struct permzk_instance permzk_instance;
typedef struct permzk_group permzk_group;

PERMZK_API const char* permzk_version(void);
PERMZK_API const char* permzk_status_name(permzk_status status);
PERMZK_API const char* permzk_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
PERMZK_API void permzk_string_free(char* s);

/* Instance files */
PERMZK_API permzk_status permzk_instance_load(const char* path, permzk_instance** out);
PERMZK_API permzk_status permzk_instance_parse(const char* text, permzk_instance** out);
PERMZK_API void permzk_instance_free(permzk_instance* instance);
PERMZK_API permzk_status permzk_instance_kind_of(const permzk_instance* instance,
                                                 permzk_instance_kind* out);
PERMZK_API permzk_status permzk_instance_format(const permzk_instance* instance, char** out);

/* Permutation groups; generators are ';'-separated one-line permutations */
PERMZK_API permzk_status permzk_group_create(size_t degree, const char* generators,
                                             permzk_group** out);
PERMZK_API void permzk_group_free(permzk_group* group);
PERMZK_API permzk_status permzk_group_order(const permzk_group* group, uint64_t* out);
PERMZK_API permzk_status permzk_group_contains(const permzk_group* group, const char* perm,
                                               int* out);
PERMZK_API permzk_status permzk_group_equal(const permzk_group* a, const permzk_group* b,
                                            int* out);
PERMZK_API permzk_status permzk_group_random_element(const permzk_group* group, uint64_t seed,
                                                     char** out);

/* Commands. exit_code follows the CLI contract: 0 accept/yes/pass,
 * 1 reject/no/fail. report and transcript are key=value / log text.
 * A cap of 0 selects the default budget. */
PERMZK_API permzk_status permzk_decide(const permzk_instance* instance, uint64_t cap,
                                       int* exit_code, char** report);

typedef struct permzk_prove_options {
  const char* protocol;    /* "group-conj" | "non-conj" | "elem-conj" */
  const char* composition; /* "default" | "sequential" | "parallel" */
  size_t rounds;           /* 0: protocol default */
  size_t k;                /* 0: protocol default */
  uint64_t seed;
  const char* prover;
  const char* verifier;
  size_t trials;
  uint64_t cap;
} permzk_prove_options;

PERMZK_API void permzk_prove_options_init(permzk_prove_options* options);
PERMZK_API permzk_status permzk_prove(const permzk_instance* instance,
                                      const permzk_prove_options* options, int* exit_code,
                                      char** report, char** transcript);

typedef struct permzk_simulate_options {
  uint64_t seed;
  const char* verifier; /* "honest" | "const0" | "const1" | "parity" */
  int exact;
  size_t samples;
  size_t k;
  uint64_t cap;
} permzk_simulate_options;

PERMZK_API void permzk_simulate_options_init(permzk_simulate_options* options);
PERMZK_API permzk_status permzk_simulate(const permzk_instance* instance,
                                         const permzk_simulate_options* options, int* exit_code,
                                         char** report);

typedef struct permzk_genlemma_options {
  size_t k; /* 0: 4m */
  size_t trials;
  uint64_t seed;
} permzk_genlemma_options;

PERMZK_API void permzk_genlemma_options_init(permzk_genlemma_options* options);
PERMZK_API permzk_status permzk_genlemma(const permzk_instance* instance,
                                         const permzk_genlemma_options* options, int* exit_code,
                                         char** report);

#ifdef __cplusplus
}
#endif

#endif /* PERMZK_PERMZK_H_ */
