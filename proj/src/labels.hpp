#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace rf {

// Node classes of an annotated reasoning trace. Context marks input that was
// present before the first generated token; the other eight classify
// generated text.
enum class NodeLabel : std::uint8_t {
    Context,
    Planning,
    Fact,
    Reasoning,
    Restatement,
    Assumption,
    Example,
    Reflection,
    Conclusion,
};

inline constexpr std::size_t kNodeLabelCount = 9;

enum class EdgeCategory : std::uint8_t { Planning, Reasoning, Evaluation };

enum class EdgeLabel : std::uint8_t {
    // planning
    FrontierPlan,
    FrontierVerify,
    PlanSubplan,
    PlanNextPlan,
    PlanAlternative,
    // reasoning
    PremiseConclusion,
    PlanStep,
    ConceptExample,
    FactDetail,
    Restatement,
    Correction,
    // evaluation
    Support,
    Refute,
    Uncertainty,
};

inline constexpr std::size_t kEdgeLabelCount = 14;

std::string_view to_string(NodeLabel label);
std::string_view to_string(EdgeLabel label);
std::string_view to_string(EdgeCategory category);

EdgeCategory category_of(EdgeLabel label);

// Both return nullopt for any string outside the closed label sets.
std::optional<NodeLabel> parse_node_label(std::string_view text);
std::optional<EdgeLabel> parse_edge_label(std::string_view text);

const std::array<NodeLabel, kNodeLabelCount>& all_node_labels();
const std::array<EdgeLabel, kEdgeLabelCount>& all_edge_labels();

} // namespace rf
