#include "stats.hpp"

#include <iomanip>
#include <sstream>

#include "format.hpp"

namespace rf {

CorpusStats corpus_stats(const std::vector<const FlowGraph*>& graphs) {
    if (graphs.empty()) throw PreconditionError("corpus is empty");
    CorpusStats stats;
    stats.graph_count = graphs.size();
    for (const FlowGraph* graph : graphs) {
        std::size_t non_context = 0;
        for (const Node& node : graph->nodes()) {
            if (node.label == NodeLabel::Context) {
                ++stats.context_total;
                continue;
            }
            ++non_context;
            ++stats.node_counts[static_cast<std::size_t>(node.label)];
        }
        for (const Edge& e : graph->edges()) {
            ++stats.edge_counts[static_cast<std::size_t>(e.label)];
            ++stats.category_counts[static_cast<std::size_t>(category_of(e.label))];
        }
        stats.node_total += non_context;
        stats.edge_total += graph->edge_count();

        const auto domain_it = graph->meta().find("domain");
        const std::string domain =
            domain_it == graph->meta().end() ? "(none)" : domain_it->second;
        CorpusStats::DomainStats& ds = stats.by_domain[domain];
        ++ds.graphs;
        ds.nodes += non_context;
        ds.edges += graph->edge_count();
    }
    return stats;
}

namespace {

std::string text_report(const CorpusStats& stats) {
    std::ostringstream out;
    out << "graphs: " << stats.graph_count << "\n";
    out << "nodes per graph: mean "
        << format_decimal_halfup(stats.node_total, stats.graph_count, 2)
        << " (context nodes excluded from node statistics; " << stats.context_total
        << " excluded)\n";
    out << "edges: " << stats.edge_total << "\n";

    out << "\nnode labels (count, percent of " << stats.node_total << "):\n";
    for (const NodeLabel label : all_node_labels()) {
        if (label == NodeLabel::Context) continue;
        const std::size_t count = stats.node_counts[static_cast<std::size_t>(label)];
        out << "  " << std::left << std::setw(20) << to_string(label) << std::right
            << std::setw(6) << count << std::setw(8) << format_percent(count, stats.node_total)
            << "\n";
    }

    out << "\nedge labels (count, percent of " << stats.edge_total << "):\n";
    for (const EdgeLabel label : all_edge_labels()) {
        const std::size_t count = stats.edge_counts[static_cast<std::size_t>(label)];
        out << "  " << std::left << std::setw(20) << to_string(label) << std::right
            << std::setw(6) << count << std::setw(8) << format_percent(count, stats.edge_total)
            << "\n";
    }

    out << "\nedge categories:\n";
    for (const EdgeCategory category :
         {EdgeCategory::Planning, EdgeCategory::Reasoning, EdgeCategory::Evaluation}) {
        const std::size_t count = stats.category_counts[static_cast<std::size_t>(category)];
        out << "  " << std::left << std::setw(20) << to_string(category) << std::right
            << std::setw(6) << count << std::setw(8) << format_percent(count, stats.edge_total)
            << "\n";
    }

    out << "\ndomains:\n";
    for (const auto& [domain, ds] : stats.by_domain)
        out << "  " << std::left << std::setw(20) << domain << std::right << " graphs "
            << std::setw(4) << ds.graphs << "  nodes " << std::setw(6) << ds.nodes << "  edges "
            << std::setw(6) << ds.edges << "\n";
    return out.str();
}

std::string csv_report(const CorpusStats& stats) {
    std::string out = "label,category,count,percent\n";
    for (const NodeLabel label : all_node_labels()) {
        if (label == NodeLabel::Context) continue;
        const std::size_t count = stats.node_counts[static_cast<std::size_t>(label)];
        out += std::string(to_string(label)) + ",node," + std::to_string(count) + "," +
               format_percent(count, stats.node_total) + "\n";
    }
    for (const EdgeLabel label : all_edge_labels()) {
        const std::size_t count = stats.edge_counts[static_cast<std::size_t>(label)];
        out += std::string(to_string(label)) + "," +
               std::string(to_string(category_of(label))) + "," + std::to_string(count) + "," +
               format_percent(count, stats.edge_total) + "\n";
    }
    return out;
}

} // namespace

std::string report(const CorpusStats& stats, ReportFormat format) {
    return format == ReportFormat::TextTable ? text_report(stats) : csv_report(stats);
}

} // namespace rf
