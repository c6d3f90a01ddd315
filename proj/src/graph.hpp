#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "document.hpp"
#include "errors.hpp"
#include "labels.hpp"
#include "report.hpp"

namespace rf {

struct Node {
    std::string id;
    NodeLabel label = NodeLabel::Reasoning;
    std::string text;
    std::uint32_t ordinal = 0; // position in document order
};

// Endpoints are node ordinals; every edge satisfies src < dst.
struct Edge {
    std::uint32_t src = 0;
    std::uint32_t dst = 0;
    EdgeLabel label = EdgeLabel::PremiseConclusion;
};

enum class Strictness { Strict, Lenient };
enum class ContextMode { Direct, Closure };

struct Compression;

// A validated left-to-right DAG over trace segments. Construction goes
// through build_graph, which establishes every structural invariant:
// acyclicity by ordinal order, the context prefix, and the single contiguous
// conclusion run. Reachability and shortest-path distances are precomputed.
class FlowGraph {
public:
    const std::vector<Node>& nodes() const { return nodes_; }
    // Sorted by (src ordinal, dst ordinal, label string); duplicates removed.
    const std::vector<Edge>& edges() const { return edges_; }
    const std::map<std::string, std::string>& meta() const { return meta_; }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::optional<std::uint32_t> find(std::string_view id) const;
    // Throws UnknownNodeError.
    std::uint32_t ordinal_of(std::string_view id) const;
    const Node& node(std::uint32_t ordinal) const { return nodes_[ordinal]; }

    // Path of one or more edges; irreflexive. Throws UnknownNodeError.
    bool connected(std::string_view x, std::string_view y) const;
    bool connected_at(std::uint32_t x, std::uint32_t y) const;

    // Shortest path length in edges; 0 iff x == y; nullopt when unreachable.
    std::optional<std::int64_t> distance(std::string_view x, std::string_view y) const;
    std::optional<std::int64_t> distance_at(std::uint32_t x, std::uint32_t y) const;

    // All x with an edge x -> id, in ordinal order.
    std::vector<std::string> direct_predecessors(std::string_view id) const;

    // Every node that reaches any seed through >= 1 edges, excluding the
    // seeds themselves; ordinal order.
    std::vector<std::string> ancestors(const std::vector<std::string>& seed_ids) const;

    // Direct mode: direct predecessors. Closure mode: all ancestors.
    std::vector<std::string> evaluation_context(std::string_view id, ContextMode mode) const;

    // Keeps the conclusion run, its ancestors, and every context node;
    // re-indexes ordinals preserving relative order. Throws
    // PreconditionError when the graph has no conclusion node.
    Compression compress_to_conclusion() const;

    AnnotationDocument to_document() const;

    // Ordinal range [first, last] of the conclusion run, if any.
    std::optional<std::pair<std::uint32_t, std::uint32_t>> conclusion_run() const;
    // Length of the context prefix.
    std::size_t context_count() const;

private:
    friend struct GraphAssembler;
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::map<std::string, std::uint32_t, std::less<>> index_;
    std::vector<std::vector<std::uint32_t>> succ_;
    std::vector<std::vector<std::uint32_t>> pred_;
    std::vector<std::vector<std::int32_t>> dist_; // -1 = unreachable
    std::map<std::string, std::string> meta_;

    void finalize(); // adjacency lists and the distance table
};

struct Compression {
    FlowGraph graph;
    std::size_t kept_non_context = 0;
    std::size_t total_non_context = 0;
    double ratio = 0.0;
};

struct BuildResult {
    // Present iff the report carries no error-severity finding.
    std::optional<FlowGraph> graph;
    ValidationReport report;
};

// Validates the document and constructs the graph. Structural rules are
// errors in both modes; the endpoint-compatibility matrix and edges between
// two context nodes are errors under Strict and warnings under Lenient.
BuildResult build_graph(const AnnotationDocument& doc, Strictness strictness);

// Endpoint-compatibility findings for an already constructed graph.
ValidationReport validate_labels(const FlowGraph& graph, Strictness strictness);

} // namespace rf
