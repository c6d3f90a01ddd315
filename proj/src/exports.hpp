#pragma once

#include <string>

#include "graph.hpp"

namespace rf {

// Plain-term fact listing for external grounders: one fact per line,
// nodes in ordinal order, then edges in (src, dst, label) order, e.g.
//   node(trace0, "restatement").
//   edge(trace0, trace1, "frontier-plan").
// Node ids must be bare atoms ([a-z][a-z0-9_]*); throws ExportError naming
// the first offending id otherwise. Derived relations are not exported.
std::string export_facts(const FlowGraph& graph);

struct DotOptions {
    bool color_by_label = true;
};

// Graphviz rendering. Node shape (and fill, unless disabled) encodes the
// node label; edge label text is the edge label. Output is byte-identical
// across runs; node text longer than 60 bytes is truncated with "...".
std::string export_dot(const FlowGraph& graph, const DotOptions& options = {});

} // namespace rf
