#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "graph.hpp"

namespace rf {

// Aggregates over a corpus of graphs. Context nodes are input, not generated
// trace, so they are excluded from every node count and the node histogram;
// the text report states this in its header.
struct CorpusStats {
    std::size_t graph_count = 0;
    std::size_t node_total = 0;    // non-context
    std::size_t context_total = 0; // excluded from node statistics
    std::size_t edge_total = 0;
    std::array<std::size_t, kNodeLabelCount> node_counts{};  // context entry stays 0
    std::array<std::size_t, kEdgeLabelCount> edge_counts{};
    std::array<std::size_t, 3> category_counts{}; // planning, reasoning, evaluation

    struct DomainStats {
        std::size_t graphs = 0;
        std::size_t nodes = 0; // non-context
        std::size_t edges = 0;
    };
    // Keyed by meta["domain"]; graphs without one fall under "(none)".
    std::map<std::string, DomainStats> by_domain;
};

// Throws PreconditionError on an empty corpus.
CorpusStats corpus_stats(const std::vector<const FlowGraph*>& graphs);

enum class ReportFormat { TextTable, Csv };

// Deterministic rendering. Percentages carry one fraction digit, the mean
// two, both rounded half up at render time only. The CSV schema is
// label,category,count,percent with one row per node label (category "node",
// context excluded) and one per edge label (category = its edge category).
std::string report(const CorpusStats& stats, ReportFormat format);

} // namespace rf
