// Copyright 2026 The tough-cycles Authors
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

#ifndef TOUGHCYCLES_TOUGHCYCLES_H_
#define TOUGHCYCLES_TOUGHCYCLES_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define TC_API __attribute__((visibility("default")))
#else
#define TC_API
#endif

typedef enum tc_status {
  TC_OK = 0,
  TC_ERR_INVALID_ARGUMENT = 1,
  TC_ERR_PARSE = 2,       /* malformed graph6 or edge list */
  TC_ERR_DOMAIN = 3,      /* input outside a supported size range */
  TC_ERR_HYPOTHESIS = 4,  /* input does not meet an operation's precondition */
  TC_ERR_IO = 5,
  TC_ERR_INTERNAL = 6
} tc_status;

/* Bit flags, combinable for sweeps. */
typedef enum tc_theorem {
  TC_THEOREM_A = 1,
  TC_THEOREM_B = 2,
  TC_THEOREM_T1 = 4
} tc_theorem;

typedef struct tc_graph tc_graph;
typedef struct tc_sweep tc_sweep;

TC_API const char* tc_version(void);

/* Message of the last failed call on the calling thread ("" if none). */
TC_API const char* tc_last_error(void);

/* Frees every string returned through a char** out parameter. */
TC_API void tc_string_free(char* s);

TC_API tc_status tc_graph_from_graph6(const char* text, tc_graph** out);
TC_API tc_status tc_graph_from_edge_list(const char* text, tc_graph** out);
TC_API void tc_graph_free(tc_graph* g);
TC_API int tc_graph_order(const tc_graph* g);
TC_API int tc_graph_size(const tc_graph* g);
TC_API tc_status tc_graph_to_graph6(const tc_graph* g, char** out);

/* n, delta, kappa, circumference, toughness, hamiltonian and witnesses. */
TC_API tc_status tc_invariants_json(const tc_graph* g, char** out);

/* Decomposition record followed by lemma verdicts, one JSON document per
   line. *failed is set to 1 when some verdict does not hold. */
TC_API tc_status tc_analyze_jsonl(const tc_graph* g, char** out, int* failed);

/* One theorem (a single flag). *violation is set to 1 for VIOLATION. */
TC_API tc_status tc_verify_json(const tc_graph* g, tc_theorem theorem, char** out,
                                int* violation);

/* Greedy extension from the cycle start[0..len) or, when start is NULL,
   from a shortest cycle. */
TC_API tc_status tc_extend_json(const tc_graph* g, const int* start, size_t len, int budget,
                                int best_improvement, char** out);

/* Number of isomorphism classes on n <= 10 vertices (connected != 0 for
   connected graphs only). */
TC_API tc_status tc_count_graphs(int n, int connected, int workers, uint64_t* out);

TC_API tc_status tc_sweep_new(tc_sweep** out);
TC_API void tc_sweep_free(tc_sweep* s);
TC_API tc_status tc_sweep_set_range(tc_sweep* s, int min_n, int max_n);
TC_API tc_status tc_sweep_set_graph6_file(tc_sweep* s, const char* path);
TC_API tc_status tc_sweep_set_graph6_text(tc_sweep* s, const char* text);
TC_API tc_status tc_sweep_set_theorems(tc_sweep* s, unsigned mask);
TC_API tc_status tc_sweep_set_lemmas(tc_sweep* s, int enabled);
TC_API tc_status tc_sweep_set_workers(tc_sweep* s, int workers);
/* Only d-regular graphs; -1 removes the filter. */
TC_API tc_status tc_sweep_set_regular(tc_sweep* s, int degree);
TC_API tc_status tc_sweep_set_allow_slow(tc_sweep* s, int enabled);
TC_API tc_status tc_sweep_run(tc_sweep* s);
TC_API tc_status tc_sweep_report_json(const tc_sweep* s, char** out);
TC_API tc_status tc_sweep_report_csv(const tc_sweep* s, char** out);
TC_API tc_status tc_sweep_violation_count(const tc_sweep* s, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif  // TOUGHCYCLES_TOUGHCYCLES_H_
