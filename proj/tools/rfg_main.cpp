// rfg — command-line front end over the reasoningflow C API.
//
// Exit codes: 0 success, 1 validation/detection input errors, 2 usage or
// parse errors. Data goes to standard output, diagnostics to standard error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reasoningflow/reasoningflow.h"

namespace {

constexpr int kOk = 0;
constexpr int kDataError = 1;
constexpr int kUsageError = 2;

template <auto Fn>
struct FnDeleter {
    template <typename T>
    void operator()(T* ptr) const {
        Fn(ptr);
    }
};

using DocPtr = std::unique_ptr<rf_document, FnDeleter<rf_document_free>>;
using GraphPtr = std::unique_ptr<rf_graph, FnDeleter<rf_graph_free>>;
using ReportPtr = std::unique_ptr<rf_report, FnDeleter<rf_report_free>>;
using ProgramPtr = std::unique_ptr<rf_program, FnDeleter<rf_program_free>>;
using MatchesPtr = std::unique_ptr<rf_matches, FnDeleter<rf_matches_free>>;
using IdListPtr = std::unique_ptr<rf_idlist, FnDeleter<rf_idlist_free>>;
using CorpusPtr = std::unique_ptr<rf_corpus, FnDeleter<rf_corpus_free>>;
using TextPtr = std::unique_ptr<char, FnDeleter<rf_text_free>>;

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) return false;
    out = buffer.str();
    return true;
}

void print_report(std::ostream& out, const rf_report* report, const std::string& indent) {
    for (size_t i = 0; i < rf_report_count(report); ++i) {
        const char* severity =
            rf_report_severity(report, i) == RF_SEVERITY_ERROR ? "error" : "warning";
        out << indent << severity << ' ' << rf_report_rule_id(report, i) << ": "
            << rf_report_message(report, i) << '\n';
    }
}

std::string counted_errors(const rf_report* report) {
    const size_t n = rf_report_error_count(report);
    return std::to_string(n) + (n == 1 ? " error" : " errors");
}

// Loads an annotation file into a leniently validated graph. Returns kOk and
// fills `out`, or prints a diagnostic and returns the command's exit code.
int load_graph(const std::string& path, GraphPtr& out) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "rfg: cannot read " << path << '\n';
        return kUsageError;
    }
    rf_document* doc_raw = nullptr;
    if (rf_document_parse(text.data(), text.size(), &doc_raw) != RF_OK) {
        std::cerr << "rfg: " << path << ": " << rf_last_error() << '\n';
        return kUsageError;
    }
    DocPtr doc(doc_raw);
    rf_graph* graph_raw = nullptr;
    rf_report* report_raw = nullptr;
    rf_status status = rf_graph_build(doc.get(), RF_LENIENT, &graph_raw, &report_raw);
    ReportPtr report(report_raw);
    if (status != RF_OK) {
        std::cerr << "rfg: " << path << ": invalid graph (" << counted_errors(report.get())
                  << ")\n";
        print_report(std::cerr, report.get(), "  ");
        return kDataError;
    }
    out.reset(graph_raw);
    return kOk;
}

const char* count_noun(size_t n) { return n == 1 ? "match" : "matches"; }

int cmd_validate(const std::vector<std::string>& paths, bool strict) {
    bool any_error = false;
    bool any_unreadable = false;
    for (const auto& path : paths) {
        std::string text;
        if (!read_file(path, text)) {
            std::cerr << "rfg: cannot read " << path << '\n';
            any_unreadable = true;
            continue;
        }
        rf_document* doc_raw = nullptr;
        if (rf_document_parse(text.data(), text.size(), &doc_raw) != RF_OK) {
            std::cerr << "rfg: " << path << ": " << rf_last_error() << '\n';
            any_unreadable = true;
            continue;
        }
        DocPtr doc(doc_raw);
        rf_graph* graph_raw = nullptr;
        rf_report* report_raw = nullptr;
        rf_graph_build(doc.get(), strict ? RF_STRICT : RF_LENIENT, &graph_raw, &report_raw);
        GraphPtr graph(graph_raw);
        ReportPtr report(report_raw);
        size_t errors = rf_report_error_count(report.get());
        size_t warnings = rf_report_count(report.get()) - errors;
        std::cout << path << ": " << errors << (errors == 1 ? " error, " : " errors, ")
                  << warnings << (warnings == 1 ? " warning" : " warnings") << '\n';
        print_report(std::cout, report.get(), "  ");
        if (errors > 0) any_error = true;
    }
    if (any_unreadable) return kUsageError;
    return any_error ? kDataError : kOk;
}

int cmd_query(const std::string& graph_path, const std::string& rules_path,
              const std::string& format) {
    GraphPtr graph;
    if (int status = load_graph(graph_path, graph); status != kOk) return status;
    std::string rules;
    if (!read_file(rules_path, rules)) {
        std::cerr << "rfg: cannot read " << rules_path << '\n';
        return kUsageError;
    }
    rf_program* program_raw = nullptr;
    if (rf_program_parse(rules.data(), rules.size(), &program_raw) != RF_OK) {
        std::cerr << "rfg: " << rules_path << ": " << rf_last_error() << '\n';
        return kUsageError;
    }
    ProgramPtr program(program_raw);
    rf_matches* matches_raw = nullptr;
    if (rf_program_evaluate(program.get(), graph.get(), &matches_raw) != RF_OK) {
        std::cerr << "rfg: " << rf_last_error() << '\n';
        return kDataError;
    }
    MatchesPtr matches(matches_raw);
    for (size_t s = 0; s < rf_matches_count(matches.get()); ++s) {
        size_t rows = rf_matches_tuple_count(matches.get(), s);
        size_t arity = rf_matches_arity(matches.get(), s);
        if (format == "csv") {
            for (size_t t = 0; t < rows; ++t) {
                std::cout << rf_matches_predicate(matches.get(), s);
                for (size_t p = 0; p < arity; ++p)
                    std::cout << ',' << rf_matches_value(matches.get(), s, t, p);
                std::cout << '\n';
            }
        } else {
            std::cout << rf_matches_predicate(matches.get(), s) << '/' << arity << ": " << rows
                      << ' ' << count_noun(rows) << '\n';
            for (size_t t = 0; t < rows; ++t) {
                std::cout << "  ";
                for (size_t p = 0; p < arity; ++p) {
                    if (p > 0) std::cout << ", ";
                    std::cout << rf_matches_value(matches.get(), s, t, p);
                }
                std::cout << '\n';
            }
        }
    }
    return kOk;
}

int detect_one(size_t index, const rf_graph* graph) {
    rf_matches* matches_raw = nullptr;
    if (rf_pattern_detect(index, graph, &matches_raw) != RF_OK) {
        std::cerr << "rfg: " << rf_last_error() << '\n';
        return kDataError;
    }
    MatchesPtr matches(matches_raw);
    size_t rows = rf_matches_tuple_count(matches.get(), 0);
    std::cout << "pattern " << rf_pattern_name(index) << ": " << rows << ' ' << count_noun(rows)
              << '\n';
    size_t arity = rf_matches_arity(matches.get(), 0);
    for (size_t t = 0; t < rows; ++t) {
        std::cout << "  ";
        for (size_t p = 0; p < arity; ++p) {
            if (p > 0) std::cout << ", ";
            std::cout << rf_matches_value(matches.get(), 0, t, p) << " ("
                      << rf_pattern_role(index, p) << ')';
        }
        std::cout << '\n';
    }
    return kOk;
}

int cmd_detect(const std::string& graph_path, const std::string& pattern, bool all) {
    const bool has_pattern = !pattern.empty();
    if (all == has_pattern) {
        std::cerr << "rfg: detect requires exactly one of --pattern or --all\n";
        return kUsageError;
    }
    size_t index = 0;
    if (!all && rf_pattern_find(pattern.c_str(), &index) != RF_OK) {
        std::cerr << "rfg: unknown pattern \"" << pattern << "\"\navailable patterns:";
        for (size_t i = 0; i < rf_pattern_count(); ++i) std::cerr << ' ' << rf_pattern_name(i);
        std::cerr << '\n';
        return kUsageError;
    }
    GraphPtr graph;
    if (int status = load_graph(graph_path, graph); status != kOk) return status;
    if (!all) return detect_one(index, graph.get());
    for (size_t i = 0; i < rf_pattern_count(); ++i)
        if (int status = detect_one(i, graph.get()); status != kOk) return status;
    return kOk;
}

int cmd_stats(const std::vector<std::string>& paths, bool csv) {
    CorpusPtr corpus([] {
        rf_corpus* raw = nullptr;
        rf_corpus_new(&raw);
        return raw;
    }());
    for (const auto& path : paths) {
        std::string text;
        if (!read_file(path, text)) {
            std::cerr << "rfg: skipping " << path << ": cannot read file\n";
            continue;
        }
        rf_document* doc_raw = nullptr;
        if (rf_document_parse(text.data(), text.size(), &doc_raw) != RF_OK) {
            std::cerr << "rfg: skipping " << path << ": " << rf_last_error() << '\n';
            continue;
        }
        DocPtr doc(doc_raw);
        rf_graph* graph_raw = nullptr;
        rf_report* report_raw = nullptr;
        rf_status status = rf_graph_build(doc.get(), RF_LENIENT, &graph_raw, &report_raw);
        ReportPtr report(report_raw);
        if (status != RF_OK) {
            std::cerr << "rfg: skipping " << path << ": invalid graph ("
                      << counted_errors(report.get()) << ")\n";
            continue;
        }
        GraphPtr graph(graph_raw);
        rf_corpus_add(corpus.get(), graph.get());
    }
    if (rf_corpus_size(corpus.get()) == 0) {
        std::cerr << "rfg: no valid graphs among the inputs\n";
        return kDataError;
    }
    char* text_raw = nullptr;
    if (rf_corpus_report(corpus.get(), csv ? RF_STATS_CSV : RF_STATS_TEXT, &text_raw) != RF_OK) {
        std::cerr << "rfg: " << rf_last_error() << '\n';
        return kDataError;
    }
    TextPtr text(text_raw);
    std::cout << text.get();
    return kOk;
}

int cmd_compress(const std::string& graph_path, const std::string& out_path) {
    GraphPtr graph;
    if (int status = load_graph(graph_path, graph); status != kOk) return status;
    rf_graph* compressed_raw = nullptr;
    size_t kept = 0;
    size_t total = 0;
    char* ratio_raw = nullptr;
    rf_status status =
        rf_graph_compress(graph.get(), &compressed_raw, &kept, &total, &ratio_raw);
    if (status != RF_OK) {
        std::cerr << "rfg: " << graph_path << ": " << rf_last_error() << '\n';
        return kDataError;
    }
    GraphPtr compressed(compressed_raw);
    TextPtr ratio(ratio_raw);
    rf_document* doc_raw = nullptr;
    if (rf_graph_to_document(compressed.get(), &doc_raw) != RF_OK) {
        std::cerr << "rfg: " << rf_last_error() << '\n';
        return kDataError;
    }
    DocPtr doc(doc_raw);
    char* rendered_raw = nullptr;
    if (rf_document_serialize(doc.get(), &rendered_raw) != RF_OK) {
        std::cerr << "rfg: " << rf_last_error() << '\n';
        return kDataError;
    }
    TextPtr rendered(rendered_raw);
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << rendered.get()) || !out.flush()) {
        std::cerr << "rfg: cannot write " << out_path << '\n';
        return kUsageError;
    }
    std::cout << ratio.get() << '\n';
    return kOk;
}

int cmd_export(const std::string& graph_path, const std::string& format, bool no_color) {
    GraphPtr graph;
    if (int status = load_graph(graph_path, graph); status != kOk) return status;
    char* text_raw = nullptr;
    rf_status status = format == "dot"
                           ? rf_graph_export_dot(graph.get(), no_color ? 0 : 1, &text_raw)
                           : rf_graph_export_facts(graph.get(), &text_raw);
    if (status != RF_OK) {
        std::cerr << "rfg: " << graph_path << ": " << rf_last_error() << '\n';
        return kDataError;
    }
    TextPtr text(text_raw);
    std::cout << text.get();
    return kOk;
}

int cmd_context(const std::string& graph_path, const std::string& node_id, bool closure) {
    GraphPtr graph;
    if (int status = load_graph(graph_path, graph); status != kOk) return status;
    rf_idlist* ids_raw = nullptr;
    if (rf_graph_context(graph.get(), node_id.c_str(),
                         closure ? RF_CONTEXT_CLOSURE : RF_CONTEXT_DIRECT, &ids_raw) != RF_OK) {
        std::cerr << "rfg: " << graph_path << ": " << rf_last_error() << '\n';
        return kDataError;
    }
    IdListPtr ids(ids_raw);
    for (size_t i = 0; i < rf_idlist_count(ids.get()); ++i) {
        const char* id = rf_idlist_get(ids.get(), i);
        size_t ordinal = 0;
        rf_graph_find(graph.get(), id, &ordinal);
        std::cout << id << '\t' << rf_graph_node_text(graph.get(), ordinal) << '\n';
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"reasoning-trace annotation graph toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", rf_version());

    std::vector<std::string> validate_paths;
    bool strict = false;
    auto* validate = app.add_subcommand("validate", "Check annotation files and report findings");
    validate->add_flag("--strict", strict, "Treat label-compatibility findings as errors");
    validate->add_option("paths", validate_paths, "Annotation files")->required();

    std::string query_graph;
    std::string rules_path;
    std::string query_format = "table";
    auto* query = app.add_subcommand("query", "Evaluate a rule program against a graph");
    query->add_option("graph", query_graph, "Annotation file")->required();
    query->add_option("--rules", rules_path, "Rule program file")->required();
    query->add_option("--out", query_format, "Output format")
        ->check(CLI::IsMember({"table", "csv"}));

    std::string detect_graph;
    std::string pattern_name;
    bool detect_all = false;
    auto* detect = app.add_subcommand("detect", "Search for built-in reasoning patterns");
    detect->add_option("graph", detect_graph, "Annotation file")->required();
    detect->add_option("--pattern", pattern_name, "Pattern name");
    detect->add_flag("--all", detect_all, "Run every built-in pattern");

    std::vector<std::string> stats_paths;
    bool stats_csv = false;
    auto* stats = app.add_subcommand("stats", "Aggregate statistics over a corpus");
    stats->add_flag("--csv", stats_csv, "Emit label,category,count,percent rows");
    stats->add_option("paths", stats_paths, "Annotation files")->required();

    std::string compress_graph;
    std::string compress_out;
    auto* compress =
        app.add_subcommand("compress", "Keep conclusions, their ancestors, and context");
    compress->add_option("graph", compress_graph, "Annotation file")->required();
    compress->add_option("--out", compress_out, "Path for the compressed annotation file")
        ->required();

    std::string export_graph;
    std::string export_format;
    bool no_color = false;
    auto* exporter = app.add_subcommand("export", "Render a graph as DOT or plain facts");
    exporter->add_option("graph", export_graph, "Annotation file")->required();
    exporter->add_option("--format", export_format, "Output format")
        ->required()
        ->check(CLI::IsMember({"dot", "facts"}));
    exporter->add_flag("--no-color", no_color, "Skip fill colors in DOT output");

    std::string context_graph;
    std::string context_node;
    bool closure = false;
    auto* context = app.add_subcommand("context", "List what a node depends on");
    context->add_option("graph", context_graph, "Annotation file")->required();
    context->add_option("node-id", context_node, "Node id")->required();
    context->add_flag("--closure", closure, "Full ancestor closure instead of direct edges");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    if (validate->parsed()) return cmd_validate(validate_paths, strict);
    if (query->parsed()) return cmd_query(query_graph, rules_path, query_format);
    if (detect->parsed()) return cmd_detect(detect_graph, pattern_name, detect_all);
    if (stats->parsed()) return cmd_stats(stats_paths, stats_csv);
    if (compress->parsed()) return cmd_compress(compress_graph, compress_out);
    if (exporter->parsed()) return cmd_export(export_graph, export_format, no_color);
    if (context->parsed()) return cmd_context(context_graph, context_node, closure);
    return kUsageError;
}
