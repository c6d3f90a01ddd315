#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "query/ast.hpp"

namespace rf {

// A named subgraph shape expressed as a rule program over the built-in
// relations, plus a human-readable role per reported tuple position.
struct PatternDef {
    std::string name;
    std::string description;
    std::string source; // rule program text, identical to the shipped .flowq file
    query::QueryProgram program;
    std::vector<std::pair<std::string, std::string>> roles; // (variable, role label)
};

// The shipped catalog: verification, deductive-chain, inductive-reasoning,
// proof-by-contradiction, backtracking, correction.
const std::vector<PatternDef>& builtin_patterns();

// nullptr when no pattern has that name.
const PatternDef* find_pattern(std::string_view name);

// Evaluates the pattern program; the match set carries one tuple per
// occurrence, ordered like any query result.
query::MatchSet detect(const PatternDef& pattern, const FlowGraph& graph);

} // namespace rf
