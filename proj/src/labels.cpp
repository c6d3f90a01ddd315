#include "labels.hpp"

namespace rf {

namespace {

constexpr std::array<std::string_view, kNodeLabelCount> kNodeNames = {
    "context",     "planning",   "fact",    "reasoning", "restatement",
    "assumption",  "example",    "reflection", "conclusion",
};

constexpr std::array<std::string_view, kEdgeLabelCount> kEdgeNames = {
    "frontier-plan",      "frontier-verify", "plan-subplan",
    "plan-next-plan",     "plan-alternative",
    "premise-conclusion", "plan-step",       "concept-example",
    "fact-detail",        "restatement",     "correction",
    "support",            "refute",          "uncertainty",
};

} // namespace

std::string_view to_string(NodeLabel label) {
    return kNodeNames[static_cast<std::size_t>(label)];
}

std::string_view to_string(EdgeLabel label) {
    return kEdgeNames[static_cast<std::size_t>(label)];
}

std::string_view to_string(EdgeCategory category) {
    switch (category) {
    case EdgeCategory::Planning: return "planning";
    case EdgeCategory::Reasoning: return "reasoning";
    case EdgeCategory::Evaluation: return "evaluation";
    }
    return "";
}

EdgeCategory category_of(EdgeLabel label) {
    switch (label) {
    case EdgeLabel::FrontierPlan:
    case EdgeLabel::FrontierVerify:
    case EdgeLabel::PlanSubplan:
    case EdgeLabel::PlanNextPlan:
    case EdgeLabel::PlanAlternative:
        return EdgeCategory::Planning;
    case EdgeLabel::PremiseConclusion:
    case EdgeLabel::PlanStep:
    case EdgeLabel::ConceptExample:
    case EdgeLabel::FactDetail:
    case EdgeLabel::Restatement:
    case EdgeLabel::Correction:
        return EdgeCategory::Reasoning;
    case EdgeLabel::Support:
    case EdgeLabel::Refute:
    case EdgeLabel::Uncertainty:
        return EdgeCategory::Evaluation;
    }
    return EdgeCategory::Reasoning;
}

std::optional<NodeLabel> parse_node_label(std::string_view text) {
    for (std::size_t i = 0; i < kNodeNames.size(); ++i)
        if (kNodeNames[i] == text) return static_cast<NodeLabel>(i);
    return std::nullopt;
}

std::optional<EdgeLabel> parse_edge_label(std::string_view text) {
    for (std::size_t i = 0; i < kEdgeNames.size(); ++i)
        if (kEdgeNames[i] == text) return static_cast<EdgeLabel>(i);
    return std::nullopt;
}

const std::array<NodeLabel, kNodeLabelCount>& all_node_labels() {
    static const std::array<NodeLabel, kNodeLabelCount> labels = [] {
        std::array<NodeLabel, kNodeLabelCount> a{};
        for (std::size_t i = 0; i < kNodeLabelCount; ++i) a[i] = static_cast<NodeLabel>(i);
        return a;
    }();
    return labels;
}

const std::array<EdgeLabel, kEdgeLabelCount>& all_edge_labels() {
    static const std::array<EdgeLabel, kEdgeLabelCount> labels = [] {
        std::array<EdgeLabel, kEdgeLabelCount> a{};
        for (std::size_t i = 0; i < kEdgeLabelCount; ++i) a[i] = static_cast<EdgeLabel>(i);
        return a;
    }();
    return labels;
}

} // namespace rf
