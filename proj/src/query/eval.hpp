#pragma once

#include <string_view>
#include <vector>

#include "../graph.hpp"
#include "ast.hpp"

namespace rf::query {

// SemiNaive is the default engine: strata are evaluated bottom-up and each
// iteration joins against the tuples new in the previous round. Naive is the
// straightforward whole-program fixpoint, kept as an independent path for
// equivalence checks.
enum class EvalStrategy { SemiNaive, Naive };

// Least-model evaluation. Returns one MatchSet per derived predicate in
// definition order; tuples are deduplicated and sorted lexicographically by
// their rendered constants.
std::vector<MatchSet> evaluate(const QueryProgram& program, const FactBase& base,
                               EvalStrategy strategy = EvalStrategy::SemiNaive);
std::vector<MatchSet> evaluate(const QueryProgram& program, const FlowGraph& graph,
                               EvalStrategy strategy = EvalStrategy::SemiNaive);

// Convenience for programs where several rules share one head (disjunction):
// evaluates the program and returns the match set of the given predicate.
// Throws std::invalid_argument when the program does not derive it.
MatchSet evaluate_predicate(const QueryProgram& program, const FlowGraph& graph,
                            std::string_view predicate);

// True when a comes before b in the lexicographic order of rendered
// constants (the MatchSet tuple order).
bool rendered_less(const Tuple& a, const Tuple& b);

} // namespace rf::query
