// Copyright 2026 The tanglekit Authors
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


/* C interface to tanglekit. All handles are opaque; every call that can
 * fail returns a tk_status and records a message for tk_last_error(). */

#ifndef TANGLEKIT_TANGLEKIT_H_
#define TANGLEKIT_TANGLEKIT_H_

#include <stddef.h>

#if defined(TANGLEKIT_BUILDING_LIBRARY)
#define TK_API __attribute__((visibility("default")))
#else
#define TK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tk_status {
  TK_OK = 0,
  TK_MALFORMED,
  TK_VALIDATION,
  TK_BOUND,
  TK_PRECONDITION,
  TK_NON_INJECTIVE_ORDER,
  TK_NOT_STANDARD,
  TK_NOT_RICH,
  TK_TRIVIAL_ELEMENTS_PRESENT,
  TK_NOT_IRREDUCIBLE,
  TK_NON_STAR_FAMILY,
  TK_AMBIGUITY,
  TK_RICHNESS_VIOLATION,
  TK_REDUCTION_STUCK,
  TK_THEOREM_VIOLATION,
  TK_INVALID_ARGUMENT,
  TK_INTERNAL
} tk_status;

typedef enum tk_source {
  TK_SOURCE_AUTO = 0,
  TK_SOURCE_SYSTEM,
  TK_SOURCE_GRAPH,
  TK_SOURCE_BIPARTITIONS
} tk_source;

typedef enum tk_trivial_policy {
  TK_TRIVIAL_REJECT = 0,
  TK_TRIVIAL_DROP,
  TK_TRIVIAL_PATCH
} tk_trivial_policy;

typedef struct tk_input tk_input;
typedef struct tk_family tk_family;
typedef struct tk_result tk_result;

typedef struct tk_options {
  const char* command;  /* validate, tangles, tst, reduce, duality, ... */
  const char* k;        /* order threshold as a rational, or NULL */
  size_t bound;         /* maximum number of separations enumerated */
  int unsafe_bounds;    /* allow bound above 16 */
  int dot;
  int check_exclusive;
  int trust_rich;
  int cross_check_rich;
  int in_s;
  int refine;           /* use the injective refinement of the order */
  tk_trivial_policy trivial;
} tk_options;

TK_API const char* tk_version(void);
TK_API const char* tk_status_name(tk_status status);
/* 0 success, 1 malformed or invalid input, 2 precondition, 3 theorem
 * violation diagnostic. */
TK_API int tk_status_exit_code(tk_status status);
/* Message and error@1 JSON of the last failure on this thread. */
TK_API const char* tk_last_error(void);
TK_API const char* tk_last_error_json(void);

TK_API tk_status tk_input_load(tk_source source, const char* text,
                               tk_input** out);
TK_API void tk_input_free(tk_input* input);
TK_API size_t tk_input_oriented(const tk_input* input);
TK_API size_t tk_input_separations(const tk_input* input);
TK_API int tk_input_has_universe(const tk_input* input);
TK_API int tk_input_has_order(const tk_input* input);
/* A system@1 document; release with tk_string_free. */
TK_API tk_status tk_input_to_json(const tk_input* input, char** out);
TK_API void tk_string_free(char* text);

/* `json` is a family@1 document or NULL for an empty family. */
TK_API tk_status tk_family_load(const tk_input* input, const char* json,
                                tk_family** out);
TK_API tk_status tk_family_add_generator(tk_family* family, const char* name);
TK_API void tk_family_free(tk_family* family);

TK_API void tk_options_init(tk_options* options);
/* Produces a result unless the arguments are invalid; the outcome of the
 * run itself is reported by tk_result_exit_code. */
TK_API tk_status tk_run(const tk_input* input, const tk_family* family,
                        const tk_options* options, tk_result** out);
TK_API int tk_result_exit_code(const tk_result* result);
TK_API const char* tk_result_json(const tk_result* result);
/* NULL unless DOT output was requested. */
TK_API const char* tk_result_dot(const tk_result* result);
TK_API void tk_result_free(tk_result* result);

#ifdef __cplusplus
}
#endif

#endif /* TANGLEKIT_TANGLEKIT_H_ */
