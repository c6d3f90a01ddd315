#include "patterns.hpp"

#include "query/eval.hpp"
#include "query/parser.hpp"

namespace rf {

namespace {

constexpr const char* kVerificationSource =
    "% verification: a planning node Y entered from X via frontier-verify,\n"
    "% reaching a verdict Z that supports or refutes X.\n"
    "verification(X, Y, Z) :-\n"
    "    node(Y, \"planning\"),\n"
    "    edge(X, Y, \"frontier-verify\"),\n"
    "    connected(Y, Z),\n"
    "    edge(X, Z, \"support\").\n"
    "verification(X, Y, Z) :-\n"
    "    node(Y, \"planning\"),\n"
    "    edge(X, Y, \"frontier-verify\"),\n"
    "    connected(Y, Z),\n"
    "    edge(X, Z, \"refute\").\n";

constexpr const char* kDeductiveChainSource =
    "% deductive-chain: two premise-conclusion steps in sequence.\n"
    "deductive-chain(X, Y, Z) :-\n"
    "    edge(X, Y, \"premise-conclusion\"),\n"
    "    edge(Y, Z, \"premise-conclusion\").\n";

constexpr const char* kInductiveReasoningSource =
    "% inductive-reasoning: a concept illustrated by an example that feeds a\n"
    "% generalization step.\n"
    "inductive-reasoning(C, E, G) :-\n"
    "    edge(C, E, \"concept-example\"),\n"
    "    edge(E, G, \"premise-conclusion\").\n";

constexpr const char* kProofByContradictionSource =
    "% proof-by-contradiction: an assumption whose downstream reasoning ends\n"
    "% in a node that refutes it.\n"
    "proof-by-contradiction(A, R) :-\n"
    "    node(A, \"assumption\"),\n"
    "    connected(A, R),\n"
    "    edge(A, R, \"refute\").\n";

constexpr const char* kBacktrackingSource =
    "% backtracking: a plan abandoned in favor of an alternative.\n"
    "backtracking(P, Q) :-\n"
    "    edge(P, Q, \"plan-alternative\").\n";

constexpr const char* kCorrectionSource =
    "% correction: a node amended by a later one.\n"
    "correction(X, Y) :-\n"
    "    edge(X, Y, \"correction\").\n";

PatternDef make_pattern(std::string name, std::string description, const char* source,
                        std::vector<std::pair<std::string, std::string>> roles) {
    PatternDef def;
    def.name = std::move(name);
    def.description = std::move(description);
    def.source = source;
    def.program = query::parse_query(source);
    def.roles = std::move(roles);
    return def;
}

} // namespace

const std::vector<PatternDef>& builtin_patterns() {
    static const std::vector<PatternDef> patterns = [] {
        std::vector<PatternDef> v;
        v.push_back(make_pattern(
            "verification",
            "a plan entered via frontier-verify whose reachable verdict supports or refutes "
            "the verified node",
            kVerificationSource,
            {{"X", "verified node"}, {"Y", "verification plan"}, {"Z", "verdict"}}));
        v.push_back(make_pattern(
            "deductive-chain", "two premise-conclusion steps applied in sequence",
            kDeductiveChainSource,
            {{"X", "premise"}, {"Y", "intermediate conclusion"}, {"Z", "final conclusion"}}));
        v.push_back(make_pattern(
            "inductive-reasoning",
            "a concept illustrated by an example that feeds a generalization step",
            kInductiveReasoningSource,
            {{"C", "concept"}, {"E", "example"}, {"G", "generalization"}}));
        v.push_back(make_pattern(
            "proof-by-contradiction",
            "an assumption whose downstream reasoning ends in a node that refutes it",
            kProofByContradictionSource, {{"A", "assumption"}, {"R", "refutation"}}));
        v.push_back(make_pattern("backtracking",
                                 "a plan abandoned in favor of an alternative plan",
                                 kBacktrackingSource,
                                 {{"P", "abandoned plan"}, {"Q", "alternative plan"}}));
        v.push_back(make_pattern("correction", "a node amended by a later node",
                                 kCorrectionSource,
                                 {{"X", "corrected node"}, {"Y", "correction"}}));
        return v;
    }();
    return patterns;
}

const PatternDef* find_pattern(std::string_view name) {
    for (const PatternDef& pattern : builtin_patterns())
        if (pattern.name == name) return &pattern;
    return nullptr;
}

query::MatchSet detect(const PatternDef& pattern, const FlowGraph& graph) {
    return query::evaluate_predicate(pattern.program, graph, pattern.name);
}

} // namespace rf
