#include "exports.hpp"

#include <array>

namespace rf {

namespace {

bool is_fact_atom(std::string_view id) {
    if (id.empty() || id[0] < 'a' || id[0] > 'z') return false;
    for (const char c : id.substr(1))
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
    return true;
}

// Fixed per-label styling; documented in the README.
constexpr std::array<std::string_view, kNodeLabelCount> kFillColors = {
    "#D9D9D9", // context
    "#FFADAD", // planning
    "#FFD6A5", // fact
    "#FDFFB6", // reasoning
    "#CAFFBF", // restatement
    "#B3FBDF", // assumption
    "#9BF6FF", // example
    "#A0C4FF", // reflection
    "#C3B1E1", // conclusion
};

constexpr std::array<std::string_view, kNodeLabelCount> kShapes = {
    "box",           // context
    "hexagon",       // planning
    "parallelogram", // fact
    "ellipse",       // reasoning
    "trapezium",     // restatement
    "diamond",       // assumption
    "house",         // example
    "octagon",       // reflection
    "doubleoctagon", // conclusion
};

std::string dot_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (const char c : text) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': break;
        default: out += c;
        }
    }
    return out;
}

// Byte-based limit, never splitting a UTF-8 sequence.
std::string truncate_text(std::string_view text) {
    constexpr std::size_t kLimit = 60;
    if (text.size() <= kLimit) return std::string(text);
    std::size_t cut = kLimit - 3;
    while (cut > 0 && (static_cast<unsigned char>(text[cut]) & 0xC0) == 0x80) --cut;
    return std::string(text.substr(0, cut)) + "...";
}

} // namespace

std::string export_facts(const FlowGraph& graph) {
    for (const Node& node : graph.nodes())
        if (!is_fact_atom(node.id))
            throw ExportError("node id \"" + node.id + "\" is not a valid fact atom");
    std::string out;
    for (const Node& node : graph.nodes()) {
        out += "node(";
        out += node.id;
        out += ", \"";
        out += to_string(node.label);
        out += "\").\n";
    }
    for (const Edge& e : graph.edges()) {
        out += "edge(";
        out += graph.node(e.src).id;
        out += ", ";
        out += graph.node(e.dst).id;
        out += ", \"";
        out += to_string(e.label);
        out += "\").\n";
    }
    return out;
}

std::string export_dot(const FlowGraph& graph, const DotOptions& options) {
    std::string out = "digraph reasoningflow {\n  rankdir=LR;\n";
    if (options.color_by_label) out += "  node [style=filled];\n";
    for (const Node& node : graph.nodes()) {
        const auto label_index = static_cast<std::size_t>(node.label);
        out += "  \"" + dot_escape(node.id) + "\" [shape=" + std::string(kShapes[label_index]);
        out += ", label=\"" + dot_escape(node.id) + ": " + std::string(to_string(node.label));
        if (!node.text.empty()) out += "\\n" + dot_escape(truncate_text(node.text));
        out += "\"";
        if (options.color_by_label)
            out += ", fillcolor=\"" + std::string(kFillColors[label_index]) + "\"";
        out += "];\n";
    }
    for (const Edge& e : graph.edges()) {
        out += "  \"" + dot_escape(graph.node(e.src).id) + "\" -> \"" +
               dot_escape(graph.node(e.dst).id) + "\" [label=\"" +
               std::string(to_string(e.label)) + "\"];\n";
    }
    out += "}\n";
    return out;
}

} // namespace rf
