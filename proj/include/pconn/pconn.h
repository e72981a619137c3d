// Copyright 2026 The pconn Authors
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

/* C interface to the pconn library. All handles are opaque. Functions that
 * can fail return a pc_status; on failure pc_last_error() describes the
 * problem (thread-local, valid until the next call on the same thread).
 * Strings returned through char** are heap-allocated and must be released
 * with pc_string_free. */

#ifndef PCONN_PCONN_H
#define PCONN_PCONN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PC_API __declspec(dllexport)
#else
#define PC_API __attribute__((visibility("default")))
#endif

typedef enum pc_status {
  PC_OK = 0,
  PC_PROPERTY_FAILED = 1, /* the checked property does not hold */
  PC_INPUT_ERROR = 2,     /* malformed input or unmet precondition */
  PC_INCONCLUSIVE = 3,    /* search budget exhausted */
  PC_INTERNAL_ERROR = 4   /* a construction failed its own verification */
} pc_status;

typedef enum pc_format {
  PC_FORMAT_AUTO = 0,
  PC_FORMAT_EDGELIST = 1,
  PC_FORMAT_GRAPH6 = 2
} pc_format;

typedef struct pc_graph pc_graph;
typedef struct pc_coloring pc_coloring;
typedef struct pc_gadget pc_gadget;

PC_API const char* pc_last_error(void);
/* Line number of the last parse error, 0 when it was not a parse error. */
PC_API int pc_last_error_line(void);
PC_API void pc_string_free(char* s);
PC_API const char* pc_version(void);

/* Graphs. */
PC_API pc_status pc_graph_parse(const char* text, pc_format format, pc_graph** out);
/* edges holds 2*m vertex ids. */
PC_API pc_status pc_graph_from_edges(int n, const int* edges, int m, pc_graph** out);
PC_API pc_status pc_graph_named(const char* name, pc_graph** out);
PC_API void pc_graph_free(pc_graph* g);
PC_API int pc_graph_order(const pc_graph* g);
PC_API int pc_graph_size(const pc_graph* g);
PC_API pc_status pc_graph_format(const pc_graph* g, pc_format format, char** out);
/* JSON object with order, size, degrees, connectivity data and diameter. */
PC_API pc_status pc_graph_info(const pc_graph* g, char** out_json);

/* Colorings, as {"k":int,"edges":[[u,v,color],...]}. */
PC_API pc_status pc_coloring_parse(const pc_graph* g, const char* json, pc_coloring** out);
PC_API pc_status pc_coloring_to_json(const pc_graph* g, const pc_coloring* c, char** out);
PC_API int pc_coloring_colors(const pc_coloring* c);
PC_API void pc_coloring_free(pc_coloring* c);

/* Operations. Each writes a JSON payload to *out_json and, where a coloring
 * results, stores it in *out_coloring (which may be NULL to discard it). */

/* PC_OK when proper connected (and strong, if requested), else
 * PC_PROPERTY_FAILED with the failing pair in the payload. */
PC_API pc_status pc_verify(const pc_graph* g, const pc_coloring* c, int strong, char** out_json);

/* Smallest k <= k_max with a (strong) proper-path k-coloring.
 * budget_nodes <= 0 selects the default. PC_INCONCLUSIVE when the budget
 * runs out before the value is settled. */
PC_API pc_status pc_exact(const pc_graph* g, int k_max, int strong, int64_t budget_nodes,
                          char** out_json, pc_coloring** out_coloring);

/* Random k-colorings; PC_OK when every trial fails to be proper connected
 * (evidence for pc > k), PC_PROPERTY_FAILED when some trial succeeds. */
PC_API pc_status pc_sample(const pc_graph* g, int k, uint64_t trials, uint64_t seed, int jobs,
                           char** out_json);

/* method: "diam3", "3ec", "bipartite" or "2conn". */
PC_API pc_status pc_color(const pc_graph* g, const char* method, int explain, char** out_json,
                          pc_coloring** out_coloring);

/* Counterexample family. variant: "k33" or "mini". */
PC_API pc_status pc_gen_counterexample(const char* variant, int scale, pc_graph** out_graph,
                                       pc_gadget** out_spec);
PC_API pc_status pc_gadget_parse(const char* json, pc_gadget** out);
PC_API pc_status pc_gadget_to_json(const pc_gadget* spec, char** out);
PC_API void pc_gadget_free(pc_gadget* spec);
PC_API pc_status pc_verify_gadget(const pc_graph* g, const pc_gadget* spec, char** out_json);
/* PC_OK when every sampled 2-coloring is refuted with a verified witness. */
PC_API pc_status pc_refute(const pc_graph* g, const pc_gadget* spec, uint64_t trials,
                           uint64_t seed, int jobs, char** out_json);
/* Refutes one given 2-coloring. */
PC_API pc_status pc_refute_coloring(const pc_graph* g, const pc_gadget* spec,
                                    const pc_coloring* c, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
