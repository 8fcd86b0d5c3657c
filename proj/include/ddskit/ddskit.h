/* Copyright 2026 The ddskit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to ddskit.
 *
 * Every function returns a ddk_status. On failure the out-parameters are left
 * untouched and ddk_last_error_message() describes the failure for the calling
 * thread until its next failing call. Handles and strings returned through
 * out-parameters are owned by the caller and released with the matching
 * *_free function; passing NULL to a *_free function is a no-op.
 *
 * Text inputs are UTF-8 and need not be NUL terminated. Coordinates and cut
 * indices in strings are 1-based.
 */

#ifndef DDSKIT_DDSKIT_H
#define DDSKIT_DDSKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(DDSKIT_BUILDING_LIBRARY)
#define DDSKIT_API __attribute__((visibility("default")))
#else
#define DDSKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ddk_status {
  DDK_OK = 0,
  DDK_INVALID_ARGUMENT = 1,
  DDK_PARSE_ERROR = 2,
  DDK_LIMIT_EXCEEDED = 3,
  DDK_INTERNAL_ERROR = 4,
  DDK_OUT_OF_MEMORY = 5
} ddk_status;

typedef struct ddk_string ddk_string;
typedef struct ddk_network ddk_network;
typedef struct ddk_digraph ddk_digraph;
typedef struct ddk_cycleset ddk_cycleset;

DDSKIT_API const char* ddk_version(void);
DDSKIT_API const char* ddk_status_name(ddk_status status);
/* Never NULL; empty when the thread has not failed yet. */
DDSKIT_API const char* ddk_last_error_message(void);

/* Owned byte strings. data is NUL terminated; size excludes the NUL. */
DDSKIT_API const char* ddk_string_data(const ddk_string* s);
DDSKIT_API size_t ddk_string_size(const ddk_string* s);
DDSKIT_API void ddk_string_free(ddk_string* s);

/* Writes 1 to *out when the first statement of text is `vertices` (digraph
 * format), 0 otherwise. */
DDSKIT_API ddk_status ddk_text_is_digraph(const char* text, size_t size, int* out);

/* ---- Networks ---------------------------------------------------------- */

DDSKIT_API ddk_status ddk_network_parse(const char* text, size_t size, ddk_network** out);
DDSKIT_API void ddk_network_free(ddk_network* net);

DDSKIT_API ddk_status ddk_network_arity(const ddk_network* net, size_t* out);
DDSKIT_API ddk_status ddk_network_alphabet(const ddk_network* net, size_t* out);
DDSKIT_API ddk_status ddk_network_state_count(const ddk_network* net, size_t* out);
/* f(state) with states in mixed radix, first variable most significant. */
DDSKIT_API ddk_status ddk_network_apply(const ddk_network* net, size_t state, size_t* out);

DDSKIT_API ddk_status ddk_network_print(const ddk_network* net, ddk_string** out);
DDSKIT_API ddk_status ddk_network_state_space(const ddk_network* net, ddk_digraph** out);
DDSKIT_API ddk_status ddk_network_state_space_dot(const ddk_network* net, ddk_string** out);
/* max_length 0 selects the state count. */
DDSKIT_API ddk_status ddk_network_attractors_json(const ddk_network* net, size_t max_length,
                                                  ddk_string** out);
DDSKIT_API ddk_status ddk_network_wiring_dot(const ddk_network* net, ddk_string** out);
DDSKIT_API ddk_status ddk_network_cuts(const ddk_network* net, int include_trivial,
                                       ddk_string** out);
/* Writes 1 to *valid when the cut (names or 1-based indices, comma
 * separated) is valid for the wiring diagram, 0 otherwise. */
DDSKIT_API ddk_status ddk_network_cut_is_valid(const ddk_network* net, const char* cut,
                                               int* valid);
DDSKIT_API ddk_status ddk_network_decompose(const ddk_network* net, const char* cut,
                                            ddk_string** out);
DDSKIT_API ddk_status ddk_network_verify_theorem_json(const ddk_network* net, const char* cut,
                                                      const size_t* levels, size_t level_count,
                                                      ddk_string** out);

/* ---- Digraphs ---------------------------------------------------------- */

DDSKIT_API ddk_status ddk_digraph_parse(const char* text, size_t size, ddk_digraph** out);
DDSKIT_API void ddk_digraph_free(ddk_digraph* g);

DDSKIT_API ddk_status ddk_digraph_vertex_count(const ddk_digraph* g, size_t* out);
DDSKIT_API ddk_status ddk_digraph_edge_count(const ddk_digraph* g, size_t* out);
DDSKIT_API ddk_status ddk_digraph_print(const ddk_digraph* g, ddk_string** out);
DDSKIT_API ddk_status ddk_digraph_dot(const ddk_digraph* g, ddk_string** out);
DDSKIT_API ddk_status ddk_digraph_closed_walk_count(const ddk_digraph* g, size_t n,
                                                    uint64_t* out);
DDSKIT_API ddk_status ddk_digraph_orbit_count(const ddk_digraph* g, size_t n, uint64_t* out);
DDSKIT_API ddk_status ddk_digraph_nondeg_orbit_count(const ddk_digraph* g, size_t n,
                                                     uint64_t* out);
/* max_length 0 selects the vertex count. */
DDSKIT_API ddk_status ddk_digraph_attractors_json(const ddk_digraph* g, size_t max_length,
                                                  ddk_string** out);

/* ---- Cycle sets -------------------------------------------------------- */

/* Parsing does not check the relations; see ddk_cycleset_check. */
DDSKIT_API ddk_status ddk_cycleset_parse(const char* text, size_t size, ddk_cycleset** out);
/* name: "a-not-b", "b-not-a", "not-ab" or "a-without-unique-degens". */
DDSKIT_API ddk_status ddk_cycleset_builtin(const char* name, size_t bound, ddk_cycleset** out);
DDSKIT_API ddk_status ddk_cycleset_attractors(const ddk_digraph* g, size_t bound,
                                              ddk_cycleset** out);
DDSKIT_API void ddk_cycleset_free(ddk_cycleset* cs);

DDSKIT_API ddk_status ddk_cycleset_bound(const ddk_cycleset* cs, size_t* out);
DDSKIT_API ddk_status ddk_cycleset_level_size(const ddk_cycleset* cs, size_t n, size_t* out);
DDSKIT_API ddk_status ddk_cycleset_print(const ddk_cycleset* cs, ddk_string** out);

/* Human readable verdict. Each flag receives 1 (holds), 0 (fails) or -1
 * (not evaluated because the relations fail); any flag pointer may be NULL. */
DDSKIT_API ddk_status ddk_cycleset_check(const ddk_cycleset* cs, ddk_string** text,
                                         int* relations_ok, int* property_a,
                                         int* property_b);
/* Fails with DDK_INVALID_ARGUMENT when the relations fail. */
DDSKIT_API ddk_status ddk_cycleset_realize(const ddk_cycleset* cs, ddk_digraph** out);
DDSKIT_API ddk_status ddk_cycleset_realize_dot(const ddk_cycleset* cs, ddk_string** out);

#ifdef __cplusplus
}
#endif

#endif /* DDSKIT_DDSKIT_H */
