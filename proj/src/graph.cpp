#include "graph.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace rf {

namespace {

std::string quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

bool edge_less(const Edge& a, const Edge& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.dst != b.dst) return a.dst < b.dst;
    return to_string(a.label) < to_string(b.label);
}

} // namespace

// ---------------------------------------------------------------------------
// construction

struct GraphAssembler {
    static FlowGraph assemble(const AnnotationDocument& doc,
                              const std::map<std::string, std::uint32_t, std::less<>>& index,
                              std::vector<NodeLabel> labels, std::vector<Edge> edges) {
        FlowGraph g;
        g.nodes_.reserve(doc.nodes.size());
        for (std::uint32_t i = 0; i < doc.nodes.size(); ++i)
            g.nodes_.push_back({doc.nodes[i].id, labels[i], doc.nodes[i].text, i});
        g.index_ = index;
        std::sort(edges.begin(), edges.end(), edge_less);
        g.edges_ = std::move(edges);
        g.meta_ = doc.meta;
        g.finalize();
        return g;
    }
};

BuildResult build_graph(const AnnotationDocument& doc, Strictness strictness) {
    BuildResult result;
    ValidationReport& report = result.report;
    const std::size_t n = doc.nodes.size();

    std::vector<std::optional<NodeLabel>> labels(n);
    std::map<std::string, std::uint32_t, std::less<>> index;

    for (std::uint32_t i = 0; i < n; ++i) {
        const NodeRecord& nr = doc.nodes[i];
        if (nr.id.empty())
            report.add("empty-node-id", Severity::Error,
                       "node at position " + std::to_string(i) + " has an empty id", {}, i);
        labels[i] = parse_node_label(nr.label);
        if (!labels[i])
            report.add("unknown-node-label", Severity::Error,
                       "unknown node label " + quoted(nr.label) + " on node " + quoted(nr.id),
                       {nr.id}, i);
        if (!nr.id.empty() && !index.try_emplace(nr.id, i).second)
            report.add("duplicate-node-id", Severity::Error,
                       "duplicate node id " + quoted(nr.id), {nr.id}, i);
        if (nr.text.empty())
            report.add("empty-node-text", Severity::Warning,
                       "node " + quoted(nr.id) + " has empty text", {nr.id}, i);
    }

    // Context nodes must form a prefix of the document order.
    bool seen_trace = false;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (!labels[i]) continue;
        if (*labels[i] == NodeLabel::Context) {
            if (seen_trace)
                report.add("context-prefix", Severity::Error,
                           "context node " + quoted(doc.nodes[i].id) +
                               " appears after a trace node",
                           {doc.nodes[i].id}, i);
        } else {
            seen_trace = true;
        }
    }

    // Conclusion nodes must form exactly one contiguous run.
    std::vector<std::uint32_t> conclusions;
    for (std::uint32_t i = 0; i < n; ++i)
        if (labels[i] && *labels[i] == NodeLabel::Conclusion) conclusions.push_back(i);
    if (!conclusions.empty() &&
        conclusions.back() - conclusions.front() + 1 != conclusions.size()) {
        std::vector<std::string> ids;
        for (std::uint32_t i : conclusions) ids.push_back(doc.nodes[i].id);
        report.add("conclusion-contiguity", Severity::Error,
                   "conclusion nodes do not form one contiguous run", std::move(ids),
                   conclusions.front(), conclusions.back());
    }

    std::set<std::tuple<std::uint32_t, std::uint32_t, EdgeLabel>> triples;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> pair_label_counts;
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < doc.edges.size(); ++j) {
        const EdgeRecord& er = doc.edges[j];
        const std::string arrow = quoted(er.src) + " -> " + quoted(er.dst);
        const std::optional<EdgeLabel> label = parse_edge_label(er.label);
        if (!label)
            report.add("unknown-edge-label", Severity::Error,
                       "unknown edge label " + quoted(er.label) + " on edge " + arrow,
                       {er.src, er.dst}, static_cast<std::int64_t>(n + j));

        const auto src_it = index.find(er.src);
        const auto dst_it = index.find(er.dst);
        const std::int64_t fallback = static_cast<std::int64_t>(n + j);
        if (src_it == index.end())
            report.add("unknown-endpoint", Severity::Error,
                       "edge " + arrow + " references unknown node " + quoted(er.src),
                       {er.src, er.dst}, fallback);
        if (dst_it == index.end())
            report.add("unknown-endpoint", Severity::Error,
                       "edge " + arrow + " references unknown node " + quoted(er.dst),
                       {er.src, er.dst}, fallback);
        if (src_it == index.end() || dst_it == index.end()) continue;

        const std::uint32_t s = src_it->second;
        const std::uint32_t d = dst_it->second;
        if (s == d)
            report.add("edge-direction", Severity::Error, "edge " + arrow + " is a self-loop",
                       {er.src, er.dst}, s, d);
        else if (s > d)
            report.add("edge-direction", Severity::Error,
                       "edge " + arrow + " violates the left-to-right order", {er.src, er.dst},
                       s, d);

        if (labels[d] && *labels[d] == NodeLabel::Context) {
            const bool src_is_context = labels[s] && *labels[s] == NodeLabel::Context;
            const Severity severity = (src_is_context && strictness == Strictness::Lenient)
                                          ? Severity::Warning
                                          : Severity::Error;
            report.add("context-incoming-edge", severity,
                       "edge " + arrow + " enters a context node", {er.src, er.dst}, s, d);
        }

        if (!label || s >= d) continue;
        if (!triples.insert({s, d, *label}).second) {
            report.add("duplicate-edge", Severity::Warning,
                       "duplicate edge " + arrow + " (" + er.label + ") collapsed",
                       {er.src, er.dst}, s, d);
            continue;
        }
        if (++pair_label_counts[{s, d}] == 2)
            report.add("parallel-edge-labels", Severity::Warning,
                       "nodes " + arrow + " are linked by more than one edge label",
                       {er.src, er.dst}, s, d);
        edges.push_back({s, d, *label});
    }

    if (report.error_count() == 0) {
        std::vector<NodeLabel> resolved(n);
        for (std::size_t i = 0; i < n; ++i) resolved[i] = *labels[i];
        FlowGraph g = GraphAssembler::assemble(doc, index, std::move(resolved), std::move(edges));
        report.append(validate_labels(g, strictness));
        if (report.error_count() == 0) result.graph = std::move(g);
    }
    report.sort_canonical();
    return result;
}

ValidationReport validate_labels(const FlowGraph& graph, Strictness strictness) {
    ValidationReport report;
    const Severity severity =
        strictness == Strictness::Strict ? Severity::Error : Severity::Warning;
    for (const Edge& e : graph.edges()) {
        const Node& src = graph.node(e.src);
        const Node& dst = graph.node(e.dst);
        const auto add = [&](const char* rule_id, const char* message) {
            report.add(rule_id, severity,
                       "edge " + quoted(src.id) + " -> " + quoted(dst.id) + ": " + message,
                       {src.id, dst.id}, e.src, e.dst);
        };
        switch (e.label) {
        case EdgeLabel::FrontierPlan:
            if (dst.label != NodeLabel::Planning)
                add("frontier-plan-target", "frontier-plan edge must end at a planning node");
            break;
        case EdgeLabel::FrontierVerify:
            if (dst.label != NodeLabel::Planning)
                add("frontier-verify-target", "frontier-verify edge must end at a planning node");
            break;
        case EdgeLabel::PlanSubplan:
            if (src.label != NodeLabel::Planning || dst.label != NodeLabel::Planning)
                add("plan-subplan-endpoints", "plan-subplan edge must connect two planning nodes");
            break;
        case EdgeLabel::PlanNextPlan:
            if (src.label != NodeLabel::Planning || dst.label != NodeLabel::Planning)
                add("plan-next-plan-endpoints",
                    "plan-next-plan edge must connect two planning nodes");
            break;
        case EdgeLabel::PlanAlternative:
            if (src.label != NodeLabel::Planning || dst.label != NodeLabel::Planning)
                add("plan-alternative-endpoints",
                    "plan-alternative edge must connect two planning nodes");
            break;
        case EdgeLabel::PlanStep:
            if (src.label != NodeLabel::Planning)
                add("plan-step-source", "plan-step edge must start at a planning node");
            break;
        case EdgeLabel::Restatement:
            if (dst.label != NodeLabel::Restatement)
                add("restatement-edge-target", "restatement edge must end at restatement node");
            break;
        case EdgeLabel::ConceptExample:
            if (src.label == NodeLabel::Fact && dst.label == NodeLabel::Fact)
                add("concept-example-fact-fact",
                    "concept-example edge between two fact nodes should be fact-detail");
            else if (dst.label != NodeLabel::Example)
                add("concept-example-target", "concept-example edge must end at an example node");
            break;
        case EdgeLabel::FactDetail:
            if (src.label != NodeLabel::Fact || dst.label != NodeLabel::Fact)
                add("fact-detail-endpoints", "fact-detail edge must connect two fact nodes");
            break;
        case EdgeLabel::PremiseConclusion:
        case EdgeLabel::Correction:
        case EdgeLabel::Support:
        case EdgeLabel::Refute:
        case EdgeLabel::Uncertainty:
            break;
        }
    }
    report.sort_canonical();
    return report;
}

// ---------------------------------------------------------------------------
// precomputation and lookups

void FlowGraph::finalize() {
    const std::size_t n = nodes_.size();
    succ_.assign(n, {});
    pred_.assign(n, {});
    for (const Edge& e : edges_) {
        succ_[e.src].push_back(e.dst);
        pred_[e.dst].push_back(e.src);
    }
    for (auto& adjacency : {&succ_, &pred_})
        for (auto& row : *adjacency) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
        }

    // Per-source BFS; edges are unweighted, so this yields shortest paths.
    dist_.assign(n, std::vector<std::int32_t>(n, -1));
    std::vector<std::uint32_t> queue;
    for (std::uint32_t s = 0; s < n; ++s) {
        auto& row = dist_[s];
        row[s] = 0;
        queue.assign(1, s);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const std::uint32_t u = queue[qi];
            for (const std::uint32_t v : succ_[u])
                if (row[v] == -1) {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
        }
    }
}

std::optional<std::uint32_t> FlowGraph::find(std::string_view id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t FlowGraph::ordinal_of(std::string_view id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) throw UnknownNodeError(std::string(id));
    return it->second;
}

bool FlowGraph::connected_at(std::uint32_t x, std::uint32_t y) const {
    return dist_[x][y] >= 1;
}

bool FlowGraph::connected(std::string_view x, std::string_view y) const {
    return connected_at(ordinal_of(x), ordinal_of(y));
}

std::optional<std::int64_t> FlowGraph::distance_at(std::uint32_t x, std::uint32_t y) const {
    const std::int32_t d = dist_[x][y];
    if (d < 0) return std::nullopt;
    return d;
}

std::optional<std::int64_t> FlowGraph::distance(std::string_view x, std::string_view y) const {
    return distance_at(ordinal_of(x), ordinal_of(y));
}

std::vector<std::string> FlowGraph::direct_predecessors(std::string_view id) const {
    std::vector<std::string> out;
    for (const std::uint32_t p : pred_[ordinal_of(id)]) out.push_back(nodes_[p].id);
    return out;
}

std::vector<std::string> FlowGraph::ancestors(const std::vector<std::string>& seed_ids) const {
    std::vector<bool> seed(nodes_.size(), false);
    std::vector<bool> reaches_seed(nodes_.size(), false);
    std::vector<bool> enqueued(nodes_.size(), false);
    std::vector<std::uint32_t> queue;
    for (const std::string& id : seed_ids) {
        const std::uint32_t ordinal = ordinal_of(id);
        seed[ordinal] = true;
        if (!enqueued[ordinal]) {
            enqueued[ordinal] = true;
            queue.push_back(ordinal);
        }
    }
    // Reverse traversal. A seed reached from another seed is marked like any
    // other ancestor but filtered from the result below.
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (const std::uint32_t p : pred_[queue[qi]]) {
            reaches_seed[p] = true;
            if (!enqueued[p]) {
                enqueued[p] = true;
                queue.push_back(p);
            }
        }
    std::vector<std::string> out;
    for (std::uint32_t i = 0; i < nodes_.size(); ++i)
        if (reaches_seed[i] && !seed[i]) out.push_back(nodes_[i].id);
    return out;
}

std::vector<std::string> FlowGraph::evaluation_context(std::string_view id,
                                                       ContextMode mode) const {
    if (mode == ContextMode::Direct) return direct_predecessors(id);
    return ancestors({std::string(id)});
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> FlowGraph::conclusion_run() const {
    std::optional<std::uint32_t> first, last;
    for (const Node& node : nodes_)
        if (node.label == NodeLabel::Conclusion) {
            if (!first) first = node.ordinal;
            last = node.ordinal;
        }
    if (!first) return std::nullopt;
    return std::make_pair(*first, *last);
}

std::size_t FlowGraph::context_count() const {
    std::size_t n = 0;
    for (const Node& node : nodes_)
        if (node.label == NodeLabel::Context) ++n;
    return n;
}

// ---------------------------------------------------------------------------
// derived documents

AnnotationDocument FlowGraph::to_document() const {
    AnnotationDocument doc;
    for (const Node& node : nodes_)
        doc.nodes.push_back({node.id, std::string(to_string(node.label)), node.text});
    for (const Edge& e : edges_)
        doc.edges.push_back(
            {nodes_[e.src].id, nodes_[e.dst].id, std::string(to_string(e.label))});
    doc.meta = meta_;
    return doc;
}

Compression FlowGraph::compress_to_conclusion() const {
    if (!conclusion_run()) throw PreconditionError("graph has no conclusion node");

    std::vector<bool> keep(nodes_.size(), false);
    std::vector<std::uint32_t> queue;
    for (const Node& node : nodes_) {
        if (node.label == NodeLabel::Conclusion) queue.push_back(node.ordinal);
        if (node.label == NodeLabel::Context) keep[node.ordinal] = true;
    }
    for (const std::uint32_t c : queue) keep[c] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (const std::uint32_t p : pred_[queue[qi]])
            if (!keep[p]) {
                keep[p] = true;
                queue.push_back(p);
            }

    AnnotationDocument doc;
    for (const Node& node : nodes_)
        if (keep[node.ordinal])
            doc.nodes.push_back({node.id, std::string(to_string(node.label)), node.text});
    for (const Edge& e : edges_)
        if (keep[e.src] && keep[e.dst])
            doc.edges.push_back(
                {nodes_[e.src].id, nodes_[e.dst].id, std::string(to_string(e.label))});
    doc.meta = meta_;

    BuildResult rebuilt = build_graph(doc, Strictness::Lenient);
    if (!rebuilt.graph)
        throw std::logic_error("compression produced an unconstructible graph");

    Compression compression;
    compression.graph = std::move(*rebuilt.graph);
    compression.total_non_context = nodes_.size() - context_count();
    compression.kept_non_context =
        compression.graph.node_count() - compression.graph.context_count();
    compression.ratio = compression.total_non_context == 0
                            ? 0.0
                            : static_cast<double>(compression.kept_non_context) /
                                  static_cast<double>(compression.total_non_context);
    return compression;
}

} // namespace rf
