#include "reasoningflow/reasoningflow.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "document.hpp"
#include "errors.hpp"
#include "exports.hpp"
#include "format.hpp"
#include "graph.hpp"
#include "labels.hpp"
#include "patterns.hpp"
#include "query/ast.hpp"
#include "query/eval.hpp"
#include "query/parser.hpp"
#include "report.hpp"
#include "stats.hpp"

using namespace rf;

namespace {

thread_local std::string g_last_error;

void set_error(std::string message) { g_last_error = std::move(message); }

rf_status fail(rf_status status, std::string message) {
    set_error(std::move(message));
    return status;
}

// Runs fn, translating exceptions into statuses and the thread error slot.
template <typename Fn>
rf_status guarded(Fn&& fn) {
    try {
        rf_status status = fn();
        if (status == RF_OK) g_last_error.clear();
        return status;
    } catch (const QueryParseError& e) {
        return fail(RF_ERR_PARSE, e.what());
    } catch (const ParseError& e) {
        return fail(RF_ERR_PARSE, e.what());
    } catch (const UnknownNodeError& e) {
        return fail(RF_ERR_NOT_FOUND, e.what());
    } catch (const PreconditionError& e) {
        return fail(RF_ERR_PRECONDITION, e.what());
    } catch (const ExportError& e) {
        return fail(RF_ERR_VALIDATION, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(RF_ERR_INVALID_ARG, e.what());
    } catch (const std::bad_alloc&) {
        return fail(RF_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(RF_ERR_INTERNAL, e.what());
    }
}

char* copy_text(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.data(), text.size() + 1);
    return out;
}

} // namespace

struct rf_document {
    AnnotationDocument doc;
};

struct rf_graph {
    FlowGraph graph;
};

struct rf_report {
    ValidationReport report;
};

struct rf_program {
    query::QueryProgram program;
};

struct rf_matches {
    struct Set {
        std::string predicate;
        size_t arity = 0;
        std::vector<std::vector<std::string>> tuples; // pre-rendered values
    };
    std::vector<Set> sets;
};

struct rf_idlist {
    std::vector<std::string> ids;
};

struct rf_corpus {
    std::vector<FlowGraph> graphs;
};

namespace {

rf_matches* render_matches(const std::vector<query::MatchSet>& sets) {
    auto* out = new rf_matches;
    out->sets.reserve(sets.size());
    for (const auto& set : sets) {
        rf_matches::Set rendered;
        rendered.predicate = set.predicate;
        rendered.arity = set.arity;
        rendered.tuples.reserve(set.tuples.size());
        for (const auto& tuple : set.tuples) {
            std::vector<std::string> row;
            row.reserve(tuple.size());
            for (const auto& value : tuple) row.push_back(query::render(value));
            rendered.tuples.push_back(std::move(row));
        }
        out->sets.push_back(std::move(rendered));
    }
    return out;
}

} // namespace

extern "C" {

const char* rf_version(void) { return "0.1.0"; }

const char* rf_last_error(void) { return g_last_error.c_str(); }

void rf_text_free(char* text) { delete[] text; }

/* ---------------------------------------------------------------- documents */

rf_status rf_document_parse(const char* text, size_t length, rf_document** out) {
    if (text == nullptr || out == nullptr)
        return fail(RF_ERR_INVALID_ARG, "text and out must not be null");
    *out = nullptr;
    return guarded([&] {
        auto doc = load_document(std::string_view(text, length));
        *out = new rf_document{std::move(doc)};
        return RF_OK;
    });
}

rf_status rf_document_serialize(const rf_document* doc, char** out) {
    if (doc == nullptr || out == nullptr)
        return fail(RF_ERR_INVALID_ARG, "doc and out must not be null");
    *out = nullptr;
    return guarded([&] {
        *out = copy_text(serialize_document(doc->doc));
        return RF_OK;
    });
}

void rf_document_free(rf_document* doc) { delete doc; }

/* --------------------------------------------------------------- validation */

rf_status rf_graph_build(const rf_document* doc, rf_strictness strictness, rf_graph** out_graph,
                         rf_report** out_report) {
    if (doc == nullptr || out_graph == nullptr)
        return fail(RF_ERR_INVALID_ARG, "doc and out_graph must not be null");
    *out_graph = nullptr;
    if (out_report != nullptr) *out_report = nullptr;
    return guarded([&] {
        auto result = build_graph(
            doc->doc, strictness == RF_STRICT ? Strictness::Strict : Strictness::Lenient);
        if (out_report != nullptr) *out_report = new rf_report{std::move(result.report)};
        if (!result.graph.has_value()) {
            set_error("document failed validation");
            return RF_ERR_VALIDATION;
        }
        *out_graph = new rf_graph{std::move(*result.graph)};
        return RF_OK;
    });
}

rf_status rf_graph_validate_labels(const rf_graph* graph, rf_strictness strictness,
                                   rf_report** out_report) {
    if (graph == nullptr || out_report == nullptr)
        return fail(RF_ERR_INVALID_ARG, "graph and out_report must not be null");
    *out_report = nullptr;
    return guarded([&] {
        auto report = validate_labels(
            graph->graph, strictness == RF_STRICT ? Strictness::Strict : Strictness::Lenient);
        *out_report = new rf_report{std::move(report)};
        return RF_OK;
    });
}

void rf_graph_free(rf_graph* graph) { delete graph; }

size_t rf_report_count(const rf_report* report) {
    return report == nullptr ? 0 : report->report.violations.size();
}

size_t rf_report_error_count(const rf_report* report) {
    return report == nullptr ? 0 : report->report.error_count();
}

const char* rf_report_rule_id(const rf_report* report, size_t index) {
    if (report == nullptr || index >= report->report.violations.size()) return nullptr;
    return report->report.violations[index].rule_id.c_str();
}

rf_severity rf_report_severity(const rf_report* report, size_t index) {
    if (report == nullptr || index >= report->report.violations.size()) return RF_SEVERITY_ERROR;
    return report->report.violations[index].severity == Severity::Error ? RF_SEVERITY_ERROR
                                                                        : RF_SEVERITY_WARNING;
}

const char* rf_report_message(const rf_report* report, size_t index) {
    if (report == nullptr || index >= report->report.violations.size()) return nullptr;
    return report->report.violations[index].message.c_str();
}

size_t rf_report_id_count(const rf_report* report, size_t index) {
    if (report == nullptr || index >= report->report.violations.size()) return 0;
    return report->report.violations[index].ids.size();
}

const char* rf_report_id(const rf_report* report, size_t index, size_t id_index) {
    if (report == nullptr || index >= report->report.violations.size()) return nullptr;
    const auto& ids = report->report.violations[index].ids;
    return id_index < ids.size() ? ids[id_index].c_str() : nullptr;
}

void rf_report_free(rf_report* report) { delete report; }

/* ------------------------------------------------------------------- graphs */

size_t rf_graph_node_count(const rf_graph* graph) {
    return graph == nullptr ? 0 : graph->graph.node_count();
}

size_t rf_graph_edge_count(const rf_graph* graph) {
    return graph == nullptr ? 0 : graph->graph.edge_count();
}

const char* rf_graph_node_id(const rf_graph* graph, size_t ordinal) {
    if (graph == nullptr || ordinal >= graph->graph.node_count()) return nullptr;
    return graph->graph.node(static_cast<uint32_t>(ordinal)).id.c_str();
}

const char* rf_graph_node_label(const rf_graph* graph, size_t ordinal) {
    if (graph == nullptr || ordinal >= graph->graph.node_count()) return nullptr;
    return to_string(graph->graph.node(static_cast<uint32_t>(ordinal)).label).data();
}

const char* rf_graph_node_text(const rf_graph* graph, size_t ordinal) {
    if (graph == nullptr || ordinal >= graph->graph.node_count()) return nullptr;
    return graph->graph.node(static_cast<uint32_t>(ordinal)).text.c_str();
}

rf_status rf_graph_find(const rf_graph* graph, const char* id, size_t* out_ordinal) {
    if (graph == nullptr || id == nullptr || out_ordinal == nullptr)
        return fail(RF_ERR_INVALID_ARG, "graph, id, and out_ordinal must not be null");
    auto ordinal = graph->graph.find(id);
    if (!ordinal.has_value())
        return fail(RF_ERR_NOT_FOUND, "unknown node id \"" + std::string(id) + "\"");
    *out_ordinal = *ordinal;
    g_last_error.clear();
    return RF_OK;
}

rf_status rf_graph_edge(const rf_graph* graph, size_t index, const char** out_src,
                        const char** out_dst, const char** out_label) {
    if (graph == nullptr || out_src == nullptr || out_dst == nullptr || out_label == nullptr)
        return fail(RF_ERR_INVALID_ARG, "graph and out parameters must not be null");
    if (index >= graph->graph.edge_count())
        return fail(RF_ERR_INVALID_ARG, "edge index out of range");
    const auto& edge = graph->graph.edges()[index];
    *out_src = graph->graph.node(edge.src).id.c_str();
    *out_dst = graph->graph.node(edge.dst).id.c_str();
    *out_label = to_string(edge.label).data();
    g_last_error.clear();
    return RF_OK;
}

rf_status rf_graph_connected(const rf_graph* graph, const char* from, const char* to, int* out) {
    if (graph == nullptr || from == nullptr || to == nullptr || out == nullptr)
        return fail(RF_ERR_INVALID_ARG, "graph, from, to, and out must not be null");
    return guarded([&] {
        *out = graph->graph.connected(from, to) ? 1 : 0;
        return RF_OK;
    });
}

rf_status rf_graph_distance(const rf_graph* graph, const char* from, const char* to,
                            long long* out) {
    if (graph == nullptr || from == nullptr || to == nullptr || out == nullptr)
        return fail(RF_ERR_INVALID_ARG, "graph, from, to, and out must not be null");
    return guarded([&] {
        auto distance = graph->graph.distance(from, to);
        *out = distance.has_value() ? *distance : -1;
        return RF_OK;
    });
}

rf_status rf_graph_predecessors(const rf_graph* graph, const char* id, rf_idlist** out) {
    if (graph == nullptr || id == nullptr || out == nullptr)
        return fail(RF_ERR_INVALID_ARG, "graph, id, and out must not be null");
    *out = nullptr;
    return guarded([&] {
        *out = new rf_idlist{graph->graph.direct_predecessors(id)};
        return RF_OK;
    });
}

rf_status rf_graph_ancestors(const rf_graph* graph, const char* id, rf_idlist** out) {
    if (graph == nullptr || id == nullptr || out == nullptr)
        return fail(RF_ERR_INVALID_ARG, "graph, id, and out must not be null");
    *out = nullptr;
    return guarded([&] {
        *out = new rf_idlist{graph->graph.ancestors({std::string(id)})};
        return RF_OK;
    });
}

rf_status rf_graph_context(const rf_graph* graph, const char* id, rf_context_mode mode,
                           rf_idlist** out) {
    if (graph == nullptr || id == nullptr || out == nullptr)
        return fail(RF_ERR_INVALID_ARG, "graph, id, and out must not be null");
    *out = nullptr;
    return guarded([&] {
        *out = new rf_idlist{graph->graph.evaluation_context(
            id, mode == RF_CONTEXT_CLOSURE ? ContextMode::Closure : ContextMode::Direct)};
        return RF_OK;
    });
}

size_t rf_idlist_count(const rf_idlist* list) { return list == nullptr ? 0 : list->ids.size(); }

const char* rf_idlist_get(const rf_idlist* list, size_t index) {
    if (list == nullptr || index >= list->ids.size()) return nullptr;
    return list->ids[index].c_str();
}

void rf_idlist_free(rf_idlist* list) { delete list; }

rf_status rf_graph_compress(const rf_graph* graph, rf_graph** out_graph, size_t* out_kept,
                            size_t* out_total, char** out_ratio) {
    if (graph == nullptr || out_graph == nullptr || out_kept == nullptr || out_total == nullptr)
        return fail(RF_ERR_INVALID_ARG, "graph, out_graph, out_kept, and out_total must not be null");
    *out_graph = nullptr;
    if (out_ratio != nullptr) *out_ratio = nullptr;
    return guarded([&] {
        auto compression = graph->graph.compress_to_conclusion();
        *out_kept = compression.kept_non_context;
        *out_total = compression.total_non_context;
        if (out_ratio != nullptr) {
            *out_ratio = copy_text(format_decimal_halfup(
                static_cast<long long>(compression.kept_non_context),
                static_cast<long long>(compression.total_non_context), 3));
        }
        *out_graph = new rf_graph{std::move(compression.graph)};
        return RF_OK;
    });
}

rf_status rf_graph_to_document(const rf_graph* graph, rf_document** out) {
    if (graph == nullptr || out == nullptr)
        return fail(RF_ERR_INVALID_ARG, "graph and out must not be null");
    *out = nullptr;
    return guarded([&] {
        *out = new rf_document{graph->graph.to_document()};
        return RF_OK;
    });
}

/* ------------------------------------------------------------------ exports */

rf_status rf_graph_export_facts(const rf_graph* graph, char** out) {
    if (graph == nullptr || out == nullptr)
        return fail(RF_ERR_INVALID_ARG, "graph and out must not be null");
    *out = nullptr;
    return guarded([&] {
        *out = copy_text(export_facts(graph->graph));
        return RF_OK;
    });
}

rf_status rf_graph_export_dot(const rf_graph* graph, int color_by_label, char** out) {
    if (graph == nullptr || out == nullptr)
        return fail(RF_ERR_INVALID_ARG, "graph and out must not be null");
    *out = nullptr;
    return guarded([&] {
        DotOptions options;
        options.color_by_label = color_by_label != 0;
        *out = copy_text(export_dot(graph->graph, options));
        return RF_OK;
    });
}

/* ------------------------------------------------------------------ queries */

rf_status rf_program_parse(const char* text, size_t length, rf_program** out) {
    if (text == nullptr || out == nullptr)
        return fail(RF_ERR_INVALID_ARG, "text and out must not be null");
    *out = nullptr;
    return guarded([&] {
        auto program = query::parse_query(std::string_view(text, length));
        *out = new rf_program{std::move(program)};
        return RF_OK;
    });
}

void rf_program_free(rf_program* program) { delete program; }

rf_status rf_program_evaluate(const rf_program* program, const rf_graph* graph,
                              rf_matches** out) {
    if (program == nullptr || graph == nullptr || out == nullptr)
        return fail(RF_ERR_INVALID_ARG, "program, graph, and out must not be null");
    *out = nullptr;
    return guarded([&] {
        auto sets = query::evaluate(program->program, graph->graph);
        *out = render_matches(sets);
        return RF_OK;
    });
}

size_t rf_matches_count(const rf_matches* matches) {
    return matches == nullptr ? 0 : matches->sets.size();
}

const char* rf_matches_predicate(const rf_matches* matches, size_t set_index) {
    if (matches == nullptr || set_index >= matches->sets.size()) return nullptr;
    return matches->sets[set_index].predicate.c_str();
}

size_t rf_matches_arity(const rf_matches* matches, size_t set_index) {
    if (matches == nullptr || set_index >= matches->sets.size()) return 0;
    return matches->sets[set_index].arity;
}

size_t rf_matches_tuple_count(const rf_matches* matches, size_t set_index) {
    if (matches == nullptr || set_index >= matches->sets.size()) return 0;
    return matches->sets[set_index].tuples.size();
}

const char* rf_matches_value(const rf_matches* matches, size_t set_index, size_t tuple_index,
                             size_t position) {
    if (matches == nullptr || set_index >= matches->sets.size()) return nullptr;
    const auto& tuples = matches->sets[set_index].tuples;
    if (tuple_index >= tuples.size() || position >= tuples[tuple_index].size()) return nullptr;
    return tuples[tuple_index][position].c_str();
}

void rf_matches_free(rf_matches* matches) { delete matches; }

/* ----------------------------------------------------------------- patterns */

size_t rf_pattern_count(void) { return builtin_patterns().size(); }

const char* rf_pattern_name(size_t index) {
    const auto& patterns = builtin_patterns();
    return index < patterns.size() ? patterns[index].name.c_str() : nullptr;
}

const char* rf_pattern_description(size_t index) {
    const auto& patterns = builtin_patterns();
    return index < patterns.size() ? patterns[index].description.c_str() : nullptr;
}

const char* rf_pattern_source(size_t index) {
    const auto& patterns = builtin_patterns();
    return index < patterns.size() ? patterns[index].source.c_str() : nullptr;
}

size_t rf_pattern_role_count(size_t index) {
    const auto& patterns = builtin_patterns();
    return index < patterns.size() ? patterns[index].roles.size() : 0;
}

const char* rf_pattern_role(size_t index, size_t role_index) {
    const auto& patterns = builtin_patterns();
    if (index >= patterns.size() || role_index >= patterns[index].roles.size()) return nullptr;
    return patterns[index].roles[role_index].second.c_str();
}

rf_status rf_pattern_find(const char* name, size_t* out_index) {
    if (name == nullptr || out_index == nullptr)
        return fail(RF_ERR_INVALID_ARG, "name and out_index must not be null");
    const auto& patterns = builtin_patterns();
    for (size_t i = 0; i < patterns.size(); ++i) {
        if (patterns[i].name == name) {
            *out_index = i;
            g_last_error.clear();
            return RF_OK;
        }
    }
    return fail(RF_ERR_NOT_FOUND, "unknown pattern \"" + std::string(name) + "\"");
}

rf_status rf_pattern_detect(size_t index, const rf_graph* graph, rf_matches** out) {
    if (graph == nullptr || out == nullptr)
        return fail(RF_ERR_INVALID_ARG, "graph and out must not be null");
    const auto& patterns = builtin_patterns();
    if (index >= patterns.size()) return fail(RF_ERR_INVALID_ARG, "pattern index out of range");
    *out = nullptr;
    return guarded([&] {
        auto set = detect(patterns[index], graph->graph);
        *out = render_matches({set});
        return RF_OK;
    });
}

/* --------------------------------------------------------------- statistics */

rf_status rf_corpus_new(rf_corpus** out) {
    if (out == nullptr) return fail(RF_ERR_INVALID_ARG, "out must not be null");
    *out = new rf_corpus;
    g_last_error.clear();
    return RF_OK;
}

rf_status rf_corpus_add(rf_corpus* corpus, const rf_graph* graph) {
    if (corpus == nullptr || graph == nullptr)
        return fail(RF_ERR_INVALID_ARG, "corpus and graph must not be null");
    return guarded([&] {
        corpus->graphs.push_back(graph->graph);
        return RF_OK;
    });
}

size_t rf_corpus_size(const rf_corpus* corpus) {
    return corpus == nullptr ? 0 : corpus->graphs.size();
}

rf_status rf_corpus_report(const rf_corpus* corpus, rf_stats_format format, char** out) {
    if (corpus == nullptr || out == nullptr)
        return fail(RF_ERR_INVALID_ARG, "corpus and out must not be null");
    *out = nullptr;
    return guarded([&] {
        std::vector<const FlowGraph*> views;
        views.reserve(corpus->graphs.size());
        for (const auto& graph : corpus->graphs) views.push_back(&graph);
        auto stats = corpus_stats(views);
        *out = copy_text(
            report(stats, format == RF_STATS_CSV ? ReportFormat::Csv : ReportFormat::TextTable));
        return RF_OK;
    });
}

void rf_corpus_free(rf_corpus* corpus) { delete corpus; }

} // extern "C"
