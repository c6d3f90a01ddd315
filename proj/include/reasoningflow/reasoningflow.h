/*
 * reasoningflow — C interface to the reasoning-trace graph toolkit.
 *
 * Annotated reasoning traces are labeled left-to-right DAGs: nodes carry one
 * of nine labels over trace segments, edges one of fourteen labels in three
 * categories. This library loads and validates annotation documents, answers
 * rule-program queries over them, detects built-in reasoning patterns, and
 * computes corpus statistics and conclusion-anchored compressions.
 *
 * Conventions:
 *  - Every constructor returns its object through an out parameter and an
 *    rf_status; any status other than RF_OK leaves out parameters null.
 *  - rf_last_error() returns a message for the calling thread's most recent
 *    failure.
 *  - const char* accessors borrow storage owned by the queried handle; the
 *    pointer stays valid until that handle is freed. Strings returned
 *    through char** out parameters are owned by the caller and must be
 *    released with rf_text_free().
 *  - Handles are freed with their matching *_free function; passing NULL to
 *    any *_free is a no-op.
 */

#ifndef REASONINGFLOW_H
#define REASONINGFLOW_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(RF_BUILD_SHARED)
#    define RF_API __declspec(dllexport)
#  else
#    define RF_API __declspec(dllimport)
#  endif
#else
#  define RF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rf_status {
    RF_OK = 0,
    RF_ERR_PARSE = 1,       /* malformed document, rule program, or fact text */
    RF_ERR_VALIDATION = 2,  /* semantic violations; no graph was produced */
    RF_ERR_NOT_FOUND = 3,   /* unknown node id or pattern name */
    RF_ERR_PRECONDITION = 4,/* operation unavailable on this input */
    RF_ERR_INVALID_ARG = 5, /* null pointer or out-of-range index */
    RF_ERR_INTERNAL = 6
} rf_status;

typedef enum rf_severity { RF_SEVERITY_ERROR = 0, RF_SEVERITY_WARNING = 1 } rf_severity;

typedef enum rf_strictness { RF_STRICT = 0, RF_LENIENT = 1 } rf_strictness;

typedef enum rf_context_mode { RF_CONTEXT_DIRECT = 0, RF_CONTEXT_CLOSURE = 1 } rf_context_mode;

typedef enum rf_stats_format { RF_STATS_TEXT = 0, RF_STATS_CSV = 1 } rf_stats_format;

typedef struct rf_document rf_document; /* parsed annotation file */
typedef struct rf_graph rf_graph;       /* validated trace graph */
typedef struct rf_report rf_report;     /* validation findings */
typedef struct rf_program rf_program;   /* parsed rule program */
typedef struct rf_matches rf_matches;   /* evaluation result */
typedef struct rf_idlist rf_idlist;     /* ordered list of node ids */
typedef struct rf_corpus rf_corpus;     /* graphs collected for statistics */

/* ------------------------------------------------------------------ library */

RF_API const char* rf_version(void);

/* Message for the calling thread's most recent failure ("" if none). */
RF_API const char* rf_last_error(void);

RF_API void rf_text_free(char* text);

/* ---------------------------------------------------------------- documents */

/* Parses annotation JSON (top-level keys "nodes", "edges", "meta").
 * RF_ERR_PARSE on malformed syntax, duplicate keys, missing required
 * fields, or wrongly typed values. */
RF_API rf_status rf_document_parse(const char* text, size_t length, rf_document** out);

/* Deterministic rendering; loading the result reproduces the document. */
RF_API rf_status rf_document_serialize(const rf_document* doc, char** out);

RF_API void rf_document_free(rf_document* doc);

/* --------------------------------------------------------------- validation */

/* Validates the document and builds the graph. out_report (optional) always
 * receives the full report, including warnings on success. RF_OK: the graph
 * was constructible under the given strictness. RF_ERR_VALIDATION: at least
 * one error-severity finding; *out_graph stays null. */
RF_API rf_status rf_graph_build(const rf_document* doc, rf_strictness strictness,
                                rf_graph** out_graph, rf_report** out_report);

/* Endpoint-compatibility findings for an already built graph (error severity
 * under RF_STRICT, warning under RF_LENIENT). */
RF_API rf_status rf_graph_validate_labels(const rf_graph* graph, rf_strictness strictness,
                                          rf_report** out_report);

RF_API void rf_graph_free(rf_graph* graph);

RF_API size_t rf_report_count(const rf_report* report);
RF_API size_t rf_report_error_count(const rf_report* report);
RF_API const char* rf_report_rule_id(const rf_report* report, size_t index);
RF_API rf_severity rf_report_severity(const rf_report* report, size_t index);
RF_API const char* rf_report_message(const rf_report* report, size_t index);
RF_API size_t rf_report_id_count(const rf_report* report, size_t index);
RF_API const char* rf_report_id(const rf_report* report, size_t index, size_t id_index);
RF_API void rf_report_free(rf_report* report);

/* ------------------------------------------------------------------- graphs */

RF_API size_t rf_graph_node_count(const rf_graph* graph);
RF_API size_t rf_graph_edge_count(const rf_graph* graph);

/* Nodes are addressed by ordinal (document position, 0-based). */
RF_API const char* rf_graph_node_id(const rf_graph* graph, size_t ordinal);
RF_API const char* rf_graph_node_label(const rf_graph* graph, size_t ordinal);
RF_API const char* rf_graph_node_text(const rf_graph* graph, size_t ordinal);

/* RF_ERR_NOT_FOUND when the id is absent. */
RF_API rf_status rf_graph_find(const rf_graph* graph, const char* id, size_t* out_ordinal);

/* Edges are addressed by index in (src, dst, label) order. */
RF_API rf_status rf_graph_edge(const rf_graph* graph, size_t index, const char** out_src,
                               const char** out_dst, const char** out_label);

/* Path of one or more edges (irreflexive). out receives 0 or 1. */
RF_API rf_status rf_graph_connected(const rf_graph* graph, const char* from, const char* to,
                                    int* out);

/* Shortest path length in edges; 0 iff from == to. out receives -1 when
 * unreachable. */
RF_API rf_status rf_graph_distance(const rf_graph* graph, const char* from, const char* to,
                                   long long* out);

/* Direct predecessors of a node, ordinal order. */
RF_API rf_status rf_graph_predecessors(const rf_graph* graph, const char* id, rf_idlist** out);

/* Everything reaching the node through >= 1 edges, ordinal order. */
RF_API rf_status rf_graph_ancestors(const rf_graph* graph, const char* id, rf_idlist** out);

/* Direct predecessors or full ancestor closure, per mode. */
RF_API rf_status rf_graph_context(const rf_graph* graph, const char* id, rf_context_mode mode,
                                  rf_idlist** out);

RF_API size_t rf_idlist_count(const rf_idlist* list);
RF_API const char* rf_idlist_get(const rf_idlist* list, size_t index);
RF_API void rf_idlist_free(rf_idlist* list);

/* Keeps the conclusion run, its ancestors, and all context nodes, re-indexed
 * in the original relative order. out_kept/out_total count non-context nodes
 * kept/overall; out_ratio (optional) receives kept/total rendered with three
 * fraction digits, rounded half up. RF_ERR_PRECONDITION when the graph has
 * no conclusion node. */
RF_API rf_status rf_graph_compress(const rf_graph* graph, rf_graph** out_graph,
                                   size_t* out_kept, size_t* out_total, char** out_ratio);

/* The graph rendered back into an annotation document. */
RF_API rf_status rf_graph_to_document(const rf_graph* graph, rf_document** out);

/* ------------------------------------------------------------------ exports */

/* Plain-term fact listing (node/2 and edge/3, one per line); node ids must
 * be bare atoms [a-z][a-z0-9_]*, otherwise RF_ERR_VALIDATION naming the id. */
RF_API rf_status rf_graph_export_facts(const rf_graph* graph, char** out);

/* Graphviz rendering; byte-deterministic. Node shape (and fill, unless
 * color_by_label is 0) encodes the node label. */
RF_API rf_status rf_graph_export_dot(const rf_graph* graph, int color_by_label, char** out);

/* ------------------------------------------------------------------ queries */

/* Parses and validates a rule program. RF_ERR_PARSE with a line/column
 * message on syntax errors, unsafe rules, redefined built-ins, negation of
 * non-built-ins, arity mismatches, or cross-type constant comparisons. */
RF_API rf_status rf_program_parse(const char* text, size_t length, rf_program** out);

RF_API void rf_program_free(rf_program* program);

/* Least-model evaluation over the graph's base relations. One match set per
 * derived predicate, in definition order; tuples deduplicated and sorted. */
RF_API rf_status rf_program_evaluate(const rf_program* program, const rf_graph* graph,
                                     rf_matches** out);

RF_API size_t rf_matches_count(const rf_matches* matches);
RF_API const char* rf_matches_predicate(const rf_matches* matches, size_t set_index);
RF_API size_t rf_matches_arity(const rf_matches* matches, size_t set_index);
RF_API size_t rf_matches_tuple_count(const rf_matches* matches, size_t set_index);
/* Rendered constant (integers in decimal, strings bare). */
RF_API const char* rf_matches_value(const rf_matches* matches, size_t set_index,
                                    size_t tuple_index, size_t position);
RF_API void rf_matches_free(rf_matches* matches);

/* ----------------------------------------------------------------- patterns */

RF_API size_t rf_pattern_count(void);
RF_API const char* rf_pattern_name(size_t index);
RF_API const char* rf_pattern_description(size_t index);
/* The pattern's rule program (identical to its shipped .flowq file). */
RF_API const char* rf_pattern_source(size_t index);
RF_API size_t rf_pattern_role_count(size_t index);
RF_API const char* rf_pattern_role(size_t index, size_t role_index);

/* RF_ERR_NOT_FOUND when no built-in pattern has that name. */
RF_API rf_status rf_pattern_find(const char* name, size_t* out_index);

/* Evaluates one pattern; the result holds a single match set whose tuple
 * positions line up with the pattern's roles. */
RF_API rf_status rf_pattern_detect(size_t index, const rf_graph* graph, rf_matches** out);

/* --------------------------------------------------------------- statistics */

RF_API rf_status rf_corpus_new(rf_corpus** out);
/* Copies the graph into the corpus (meta travels with it). */
RF_API rf_status rf_corpus_add(rf_corpus* corpus, const rf_graph* graph);
RF_API size_t rf_corpus_size(const rf_corpus* corpus);
/* Aggregated report; RF_ERR_PRECONDITION on an empty corpus. Context nodes
 * are excluded from node counts (the text header says so). */
RF_API rf_status rf_corpus_report(const rf_corpus* corpus, rf_stats_format format, char** out);
RF_API void rf_corpus_free(rf_corpus* corpus);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* REASONINGFLOW_H */
