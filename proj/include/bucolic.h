#ifndef BUCOLIC_H
#define BUCOLIC_H

/* C interface to the bucolic graph toolkit.  Handles are opaque; every
 * fallible call returns a status and reports the failure message through
 * bucolic_last_error() on the calling thread.  Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * bucolic_string_free(). */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bucolic_status {
    BUCOLIC_OK = 0,
    BUCOLIC_INVALID_ARGUMENT = 1,
    BUCOLIC_PARSE_ERROR = 2,
    BUCOLIC_DISCONNECTED = 3,
    BUCOLIC_PRECONDITION = 4,
    BUCOLIC_BOUND_EXCEEDED = 5,
    BUCOLIC_BUDGET_EXCEEDED = 6,
    BUCOLIC_CAP_EXCEEDED = 7,
    BUCOLIC_NOT_AUTOMORPHISM = 8,
    BUCOLIC_INTERNAL = 9
} bucolic_status;

/* Semantic version of the library. */
const char* bucolic_version(void);

/* Message of the most recent failing call on this thread; empty before the
 * first failure.  The pointer stays valid until the next failing call. */
const char* bucolic_last_error(void);

void bucolic_string_free(char* text);

/* FNV-1a 64-bit hash of a NUL-terminated string (NULL hashes like ""). */
uint64_t bucolic_text_hash(const char* text);

/* ---- documents -------------------------------------------------------- */

typedef struct bucolic_document bucolic_document;

/* Parses edge-list text or a structured record (auto-detected). */
bucolic_status bucolic_document_parse(const char* text, bucolic_document** out);

/* Builds a generator document.  Families: path, cycle, complete,
 * complete-bipartite, hypercube, wheel, almost-wheel, hamming.  `params` is a
 * comma-separated integer list, e.g. "5" or "3,2". */
bucolic_status bucolic_document_generate(const char* family, const char* params,
                                         bucolic_document** out);

/* Serializes in the document's own format, or in the structured format when
 * `structured` is nonzero. */
bucolic_status bucolic_document_serialize(const bucolic_document* doc, int structured,
                                          char** out);

void bucolic_document_free(bucolic_document* doc);

int bucolic_document_vertex_count(const bucolic_document* doc);
int bucolic_document_edge_count(const bucolic_document* doc);
int bucolic_document_has_cells(const bucolic_document* doc);
int bucolic_document_has_group(const bucolic_document* doc);

/* ---- graphs ----------------------------------------------------------- */

typedef struct bucolic_graph bucolic_graph;

/* `edge_pairs` holds 2 * edge_count vertex ids: u0, v0, u1, v1, ... */
bucolic_status bucolic_graph_create(int vertex_count, const int* edge_pairs, int edge_count,
                                    bucolic_graph** out);
bucolic_status bucolic_graph_from_document(const bucolic_document* doc, bucolic_graph** out);
void bucolic_graph_free(bucolic_graph* g);

int bucolic_graph_vertex_count(const bucolic_graph* g);
int bucolic_graph_edge_count(const bucolic_graph* g);
int bucolic_graph_adjacent(const bucolic_graph* g, int u, int v);

bucolic_status bucolic_graph_to_dot(const bucolic_graph* g, char** out);

/* ---- analyses --------------------------------------------------------- */
/* Each call renders its result as a JSON object text. */

/* `class_name` is one of: all, bucolic, bridged, weakly-bridged,
 * strongly-bucolic, pre-median, weakly-modular.  With "all" every class is
 * reported; `member` then reflects the bucolic verdict.  Negative answers
 * carry replayable certificates. */
bucolic_status bucolic_check(const bucolic_graph* g, const char* class_name, int exhaustive,
                             char** out_json);

/* `kind` is convex, gated, or triangle-gated.  The report lists the hull and
 * its round-by-round closure trace. */
bucolic_status bucolic_hull(const bucolic_graph* g, const char* kind, const int* set,
                            int set_length, char** out_json);

/* Unfolds the universal cover of the document's complex (explicit cells, or
 * the flag completion) from `basepoint`.  `radius` < 0 means unbounded;
 * `budget` <= 0 selects the default vertex budget.  With `emit_dot` the
 * report embeds a DOT rendering of the cover graph. */
bucolic_status bucolic_cover(const bucolic_document* doc, int basepoint, int radius, int budget,
                             int emit_dot, char** out_json);

/* Amalgam/product decomposition of a connected bucolic graph, re-verified
 * bottom-up; the report embeds the tree and the verification verdict. */
bucolic_status bucolic_decompose(const bucolic_graph* g, char** out_json);

/* `method` is bfs or lexbfs.  The report lists the father map and the
 * fellow-traveler check result. */
bucolic_status bucolic_moor(const bucolic_graph* g, int base, const char* method,
                            char** out_json);

/* Group-invariant prism of the document's graph under the closure of its
 * group field (cell-preserving when the document lists cells).  On at most
 * twelve vertices the result is cross-checked against exhaustive search;
 * `budget` <= 0 selects the defaults. */
bucolic_status bucolic_fixprism(const bucolic_document* doc, int budget, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* BUCOLIC_H */
