// Copyright 2026 The hyperwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the hyperwit library.
 *
 * Objects are opaque handles released with the matching *_free call. Every
 * fallible function returns an hw_status; on failure the message is available
 * from hw_last_error_message() on the same thread. Strings returned through
 * `char **out` are owned by the caller and released with hw_string_free().
 */

#ifndef HYPERWIT_HYPERWIT_H_
#define HYPERWIT_HYPERWIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(HYPERWIT_BUILDING_LIBRARY)
#define HW_API __declspec(dllexport)
#else
#define HW_API __declspec(dllimport)
#endif
#else
#define HW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hw_status {
    HW_OK = 0,
    HW_ERR_INVALID_ARGUMENT = 1,
    HW_ERR_PRECONDITION = 2,
    HW_ERR_LIMIT = 3,       /* a size cap was exceeded; the message names it */
    HW_ERR_VALIDATION = 4,  /* an internal cross-check disagreed */
    HW_ERR_INTERNAL = 5
} hw_status;

typedef enum hw_family {
    HW_FAMILY_SINGLE_MAX = 0,     /* one n-edge */
    HW_FAMILY_ALL_N_MINUS_1 = 1,  /* every (n-1)-edge */
    HW_FAMILY_ALL_GE_N_MINUS_1 = 2
} hw_family;

typedef enum hw_format { HW_FORMAT_JSON = 0, HW_FORMAT_CSV = 1 } hw_format;

typedef struct hw_limits {
    int sweep_cap;     /* bipartition sweeps, default 12 */
    int dense_cap;     /* dense matrices, default 8 */
    int symbolic_cap;  /* Pauli expansions, default 10 */
    int threads;       /* 0 = one per hardware thread, default 1 */
} hw_limits;

typedef struct hw_hypergraph hw_hypergraph;
typedef struct hw_state hw_state;

HW_API const char *hw_version(void);
HW_API const char *hw_status_name(hw_status status);
HW_API const char *hw_last_error_message(void);
HW_API void hw_string_free(char *s);
HW_API void hw_limits_default(hw_limits *limits);
HW_API hw_status hw_family_parse(const char *name, hw_family *out);

/* Hypergraphs */
HW_API hw_status hw_hypergraph_parse(const char *text, hw_hypergraph **out);
HW_API hw_status hw_hypergraph_from_edges_json(int n, const char *edges_json,
                                               hw_hypergraph **out);
HW_API hw_status hw_hypergraph_family(hw_family family, int n, hw_hypergraph **out);
HW_API hw_status hw_hypergraph_random_connected(uint64_t seed, int n, hw_hypergraph **out);
HW_API void hw_hypergraph_free(hw_hypergraph *h);
HW_API hw_status hw_hypergraph_num_vertices(const hw_hypergraph *h, int *out);
HW_API hw_status hw_hypergraph_num_edges(const hw_hypergraph *h, size_t *out);
HW_API hw_status hw_hypergraph_k_max(const hw_hypergraph *h, int *out);
HW_API hw_status hw_hypergraph_is_connected(const hw_hypergraph *h, int *out);
HW_API hw_status hw_hypergraph_to_string(const hw_hypergraph *h, char **out);

/* Sign states */
HW_API hw_status hw_state_build(const hw_hypergraph *h, hw_state **out);
HW_API hw_status hw_state_from_hex(int n, const char *hex, hw_state **out);
HW_API void hw_state_free(hw_state *s);
HW_API hw_status hw_state_num_qubits(const hw_state *s, int *out);
HW_API hw_status hw_state_sign(const hw_state *s, uint64_t label, int *out);
HW_API hw_status hw_state_to_hex(const hw_state *s, char **out);
HW_API hw_status hw_state_extract(const hw_state *s, hw_hypergraph **graph, int *global_phase);

/* Scalars */
HW_API hw_status hw_alpha_brute(const hw_state *s, const hw_limits *limits, double *alpha);
HW_API hw_status hw_alpha_closed_form(hw_family family, int n, double *alpha);
HW_API hw_status hw_lower_bound(const hw_hypergraph *h, const hw_limits *limits, double *bound,
                                double *measured_e, int *holds);

/* Reports. `passed` (may be NULL) receives 0 when a check inside failed. */
HW_API hw_status hw_report_state(const hw_hypergraph *h, char **out);
HW_API hw_status hw_report_state_dump(int n, const char *hex, char **out);
/* what: "stabilizers", "basis" or "projector" */
HW_API hw_status hw_report_verify(const hw_hypergraph *h, const char *what,
                                  const hw_limits *limits, char **out, int *passed);
/* k <= 0 covers every k in 2..n/2 */
HW_API hw_status hw_report_structure(hw_family family, int n, int k, char **out, int *passed);
/* mode: "brute", "procedure" or "closed-form" */
HW_API hw_status hw_report_entanglement(const hw_hypergraph *h, const char *mode, int cross_check,
                                        const hw_limits *limits, hw_format format, char **out,
                                        int *passed);
/* part_a: "1,2,3", or NULL / "" for every bipartition */
HW_API hw_status hw_report_reduce(const hw_hypergraph *h, const char *part_a,
                                  const hw_limits *limits, hw_format format, char **out,
                                  int *passed);
/* kind: "projector" or "stabilizer"; alpha_source: NULL for the default, or
 * "closed-form", "kmax-bound", "measured", "procedure" */
HW_API hw_status hw_report_witness(const hw_hypergraph *h, const char *kind,
                                   const char *alpha_source, const hw_limits *limits, char **out,
                                   int *passed);
/* p: "num/den", integer or decimal */
HW_API hw_status hw_report_witness_eval(const hw_hypergraph *h, const char *kind,
                                        const char *alpha_source, const char *p,
                                        const hw_limits *limits, char **out, int *passed);
HW_API hw_status hw_report_robustness_table(hw_family family, int n_min, int n_max,
                                            hw_format format, char **out);
/* mode: "canonical", "greedy" or "exact" */
HW_API hw_status hw_report_settings(const hw_hypergraph *h, const char *kind,
                                    const char *alpha_source, const char *mode, int list,
                                    const hw_limits *limits, char **out);
HW_API hw_status hw_report_lower_bound_campaign(uint64_t seed, int count, int n_min, int n_max,
                                                int reduce_max_n, const hw_limits *limits,
                                                hw_format format, char **out, int *passed);

#ifdef __cplusplus
}
#endif

#endif /* HYPERWIT_HYPERWIT_H_ */
