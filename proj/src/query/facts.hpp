#pragma once

#include <string_view>

#include "../graph.hpp"
#include "ast.hpp"

namespace rf::query {

// Grounds the five built-in relations from a graph:
//   node(id, label)          one per node
//   edge(src, dst, label)    one per edge
//   connected(x, y)          every pair with a path of >= 1 edges
//   distance(x, y, d)        every finite shortest-path length, incl. d = 0
//                            for x == y
//   order(id, ordinal)       document position of each node
FactBase ground_facts(const FlowGraph& graph);

// Reads a fact listing (the export_facts format): lines of
//   pred(term, ...).
// where terms are bare atoms, quoted strings, or integers. "%" starts a line
// comment. Arity must be consistent per predicate. Throws QueryParseError.
FactBase parse_facts(std::string_view text);

} // namespace rf::query
