#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "query/eval.hpp"
#include "query/facts.hpp"
#include "query/parser.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

using namespace rf;
using namespace rf::test;
using query::EvalStrategy;
using query::MatchSet;
using query::Tuple;
using query::Value;

namespace {

// Renders every tuple of a match set, e.g. {"a b", "a c"}.
std::vector<std::string> rows(const MatchSet& set) {
    std::vector<std::string> out;
    for (const Tuple& tuple : set.tuples) {
        std::string row;
        for (const Value& value : tuple) {
            if (!row.empty()) row += ' ';
            row += query::render(value);
        }
        out.push_back(std::move(row));
    }
    return out;
}

MatchSet eval_one(const std::string& source, const FlowGraph& graph,
                  EvalStrategy strategy = EvalStrategy::SemiNaive) {
    const auto sets = query::evaluate(query::parse_query(source), graph, strategy);
    REQUIRE(sets.size() == 1);
    return sets[0];
}

FlowGraph premise_chain(std::size_t n) {
    AnnotationDocument doc;
    for (std::size_t i = 0; i < n; ++i)
        doc.nodes.push_back(
            {"t" + std::to_string(i), "reasoning", "segment " + std::to_string(i)});
    for (std::size_t i = 0; i + 1 < n; ++i)
        doc.edges.push_back({doc.nodes[i].id, doc.nodes[i + 1].id, "premise-conclusion"});
    BuildResult result = build_graph(doc, Strictness::Strict);
    REQUIRE(result.graph.has_value());
    return std::move(*result.graph);
}

constexpr const char* kVerificationSource =
    "verification(X, Y, Z) :- node(Y, \"planning\"), edge(X, Y, \"frontier-verify\"), "
    "connected(Y, Z), edge(X, Z, \"support\").\n"
    "verification(X, Y, Z) :- node(Y, \"planning\"), edge(X, Y, \"frontier-verify\"), "
    "connected(Y, Z), edge(X, Z, \"refute\").\n";

} // namespace

TEST_CASE("the verification query finds its single occurrence") {
    FlowGraph graph = build_fixture("verify_span.rfg.json");
    const MatchSet set = eval_one(kVerificationSource, graph);
    CHECK(set.predicate == "verification");
    CHECK(set.arity == 3);
    CHECK(rows(set) == std::vector<std::string>{"trace39 trace40 trace41"});
}

TEST_CASE("single-rule projection") {
    FlowGraph graph = build_fixture("diamond.rfg.json");
    const MatchSet set = eval_one("p(X, Y) :- edge(X, Y, \"premise-conclusion\").", graph);
    CHECK(rows(set) == std::vector<std::string>{"a b", "a c", "b d", "c d"});
}

TEST_CASE("two rules with one head take the union") {
    FlowGraph graph = build_fixture("verify_span.rfg.json");
    const MatchSet set = eval_one("touch(X, Y) :- edge(X, Y, \"support\").\n"
                                  "touch(X, Y) :- edge(X, Y, \"plan-step\").\n",
                                  graph);
    CHECK(rows(set) == std::vector<std::string>{"trace39 trace41", "trace40 trace41"});
}

TEST_CASE("recursion reaches a fixpoint") {
    FlowGraph graph = build_fixture("diamond.rfg.json");
    const MatchSet set =
        eval_one("anc(X, Y) :- edge(X, Y, \"premise-conclusion\").\n"
                 "anc(X, Z) :- anc(X, Y), edge(Y, Z, \"premise-conclusion\").\n",
                 graph);
    CHECK(rows(set) == std::vector<std::string>{"a b", "a c", "a d", "b d", "c d"});
}

TEST_CASE("mutually recursive predicates track path parity") {
    FlowGraph chain = premise_chain(4);
    const auto sets = query::evaluate(
        query::parse_query("odd_path(X, Y) :- edge(X, Y, \"premise-conclusion\").\n"
                           "odd_path(X, Z) :- even_path(X, Y), edge(Y, Z, "
                           "\"premise-conclusion\").\n"
                           "even_path(X, Z) :- odd_path(X, Y), edge(Y, Z, "
                           "\"premise-conclusion\").\n"),
        chain);
    REQUIRE(sets.size() == 2);
    CHECK(sets[0].predicate == "odd_path"); // definition order
    CHECK(rows(sets[0]) == std::vector<std::string>{"t0 t1", "t0 t3", "t1 t2", "t2 t3"});
    CHECK(sets[1].predicate == "even_path");
    CHECK(rows(sets[1]) == std::vector<std::string>{"t0 t2", "t1 t3"});
}

TEST_CASE("both strategies and the oracle agree across fixtures and programs") {
    const std::vector<std::string> programs = {
        "p(X, Y) :- edge(X, Y, \"premise-conclusion\").",
        "p(X) :- node(X, \"reasoning\"), not connected(X, X).",
        "p(X, Y) :- connected(X, Y), not edge(X, Y, \"premise-conclusion\").",
        "p(X, Y) :- order(X, N), order(Y, M), N < M.",
        "p(X, Z) :- edge(X, Y, \"premise-conclusion\"), connected(Y, Z).",
        "anc(X, Y) :- edge(X, Y, \"premise-conclusion\").\n"
        "anc(X, Z) :- anc(X, Y), edge(Y, Z, \"premise-conclusion\").\n",
        kVerificationSource,
    };
    for (const std::string fixture :
         {"chain_valid.rfg.json", "diamond.rfg.json", "verify_span.rfg.json",
          "full_keep.rfg.json", "stats1.rfg.json", "stats2.rfg.json", "empty.rfg.json"}) {
        AnnotationDocument doc = load_fixture(fixture);
        BuildResult built = build_graph(doc, Strictness::Lenient);
        REQUIRE(built.graph.has_value());
        const auto oracle_facts = oracle_base(doc);
        for (const std::string& source : programs) {
            CAPTURE(fixture);
            CAPTURE(source);
            const auto program = query::parse_query(source);
            const auto semi = query::evaluate(program, *built.graph, EvalStrategy::SemiNaive);
            const auto naive = query::evaluate(program, *built.graph, EvalStrategy::Naive);
            const auto expected = oracle_evaluate(program, oracle_facts);
            REQUIRE(semi.size() == naive.size());
            for (std::size_t i = 0; i < semi.size(); ++i) {
                CHECK(semi[i].predicate == naive[i].predicate);
                CHECK(semi[i].tuples == naive[i].tuples);
                const std::set<Tuple> got(semi[i].tuples.begin(), semi[i].tuples.end());
                CHECK(got == expected.at(semi[i].predicate));
                CHECK(got.size() == semi[i].tuples.size()); // deduplicated
            }
        }
    }
}

TEST_CASE("body order never changes the result") {
    FlowGraph graph = build_fixture("verify_span.rfg.json");
    const std::vector<std::string> variants = {
        "v(X, Y, Z) :- node(Y, \"planning\"), edge(X, Y, \"frontier-verify\"), "
        "connected(Y, Z), edge(X, Z, \"support\").",
        "v(X, Y, Z) :- edge(X, Z, \"support\"), connected(Y, Z), "
        "edge(X, Y, \"frontier-verify\"), node(Y, \"planning\").",
        "v(X, Y, Z) :- connected(Y, Z), node(Y, \"planning\"), edge(X, Z, \"support\"), "
        "edge(X, Y, \"frontier-verify\").",
    };
    std::vector<std::string> first;
    for (const std::string& source : variants) {
        const auto got = rows(eval_one(source, graph));
        if (first.empty()) first = got;
        CHECK(got == first);
    }
    CHECK(first == std::vector<std::string>{"trace39 trace40 trace41"});
}

TEST_CASE("negation of a built-in complements within bound pairs") {
    FlowGraph graph = build_fixture("diamond.rfg.json");
    const MatchSet set = eval_one(
        "unreached(X, Y) :- node(X, A), node(Y, B), not connected(X, Y).", graph);
    // 16 ordered pairs, 5 of them connected.
    CHECK(set.tuples.size() == 11);
    const auto listing = rows(set);
    CHECK(std::find(listing.begin(), listing.end(), "a a") != listing.end());
    CHECK(std::find(listing.begin(), listing.end(), "a d") == listing.end());
}

TEST_CASE("comparisons order integers numerically, not textually") {
    FlowGraph chain = premise_chain(12);
    // distance(t0, t10) = 10 and distance(t0, t11) = 11 must beat "9" < "10".
    CHECK(rows(eval_one("far(X, Y) :- distance(X, Y, D), D >= 10.", chain)) ==
          std::vector<std::string>{"t0 t10", "t0 t11", "t1 t11"});
    CHECK(rows(eval_one("far(X, Y) :- distance(X, Y, D), D > 9.", chain)) ==
          std::vector<std::string>{"t0 t10", "t0 t11", "t1 t11"});
}

TEST_CASE("string comparisons order lexicographically") {
    FlowGraph graph = build_fixture("diamond.rfg.json");
    const MatchSet set =
        eval_one("pair(X, Y) :- node(X, A), node(Y, B), X < Y, Y <= \"b\".", graph);
    CHECK(rows(set) == std::vector<std::string>{"a b"});
}

TEST_CASE("output tuples sort by rendered text") {
    FlowGraph chain = premise_chain(12);
    const MatchSet set = eval_one("ord(N, X) :- order(X, N).", chain);
    REQUIRE(set.tuples.size() == 12);
    // Rendered "10" and "11" come between "1" and "2".
    CHECK(query::render(set.tuples[0][0]) == "0");
    CHECK(query::render(set.tuples[1][0]) == "1");
    CHECK(query::render(set.tuples[2][0]) == "10");
    CHECK(query::render(set.tuples[3][0]) == "11");
    CHECK(query::render(set.tuples[4][0]) == "2");
}

TEST_CASE("comparing a bound string variable with an integer never holds") {
    FlowGraph graph = build_fixture("diamond.rfg.json");
    CHECK(eval_one("p(X) :- node(X, L), L == 1.", graph).tuples.empty());
    // Cross-type inequality is still false, not vacuously true.
    CHECK(eval_one("p(X) :- node(X, L), L != 1.", graph).tuples.empty());
}

TEST_CASE("comparing constants of different types is rejected at parse time") {
    CHECK_THROWS_WITH_AS((void)query::parse_query("p(X) :- node(X, L), 1 == \"a\"."),
                         "line 1, column 21: cannot compare an integer with a string",
                         QueryParseError);
}

TEST_CASE("parse errors carry line and column") {
    try {
        (void)query::parse_query("ok(X) :- node(X, \"fact\").\nbroken(X :- node(X, \"fact\").\n");
        FAIL("expected a parse error");
    } catch (const QueryParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 10);
    }
    CHECK_THROWS_AS((void)query::parse_query(""), QueryParseError);
    CHECK_THROWS_AS((void)query::parse_query("p(X) :- node(X, \"unterminated)."),
                    QueryParseError);
    CHECK_THROWS_AS((void)query::parse_query("p(X) :- node(X, \"bad\\q\")."), QueryParseError);
    CHECK_THROWS_AS((void)query::parse_query("p(X) :- node(X, \"fact\")"), QueryParseError);
    CHECK_THROWS_AS((void)query::parse_query("p() :- node(X, \"fact\")."), QueryParseError);
}

TEST_CASE("unsafe rules are rejected") {
    CHECK_THROWS_WITH_AS(
        (void)query::parse_query("p(X, Y) :- node(X, L)."),
        "line 1, column 1: unsafe rule: head variable \"Y\" is not bound by a positive body atom",
        QueryParseError);
    CHECK_THROWS_AS((void)query::parse_query("p(X) :- node(X, L), not connected(X, Y)."),
                    QueryParseError);
    CHECK_THROWS_AS((void)query::parse_query("p(X) :- node(X, L), Y < 3."), QueryParseError);
    // A variable only bound by a negated atom does not count.
    CHECK_THROWS_AS(
        (void)query::parse_query("p(X) :- not connected(X, X)."), QueryParseError);
}

TEST_CASE("reserved predicates cannot be redefined") {
    CHECK_THROWS_WITH_AS((void)query::parse_query("node(X, Y) :- edge(X, Y, \"support\")."),
                         "line 1, column 1: cannot redefine built-in predicate \"node\"",
                         QueryParseError);
    for (const std::string head : {"edge(X, Y, Z)", "connected(X, Y)", "distance(X, Y, Z)",
                                   "order(X, Y)"}) {
        CAPTURE(head);
        CHECK_THROWS_AS((void)query::parse_query(head + " :- node(X, L), node(Y, M), "
                                                        "node(Z, K)."),
                        QueryParseError);
    }
}

TEST_CASE("arity misuse is rejected") {
    CHECK_THROWS_WITH_AS(
        (void)query::parse_query("p(X) :- node(X, L, K)."),
        "line 1, column 9: built-in predicate \"node\" takes 2 arguments, got 3",
        QueryParseError);
    CHECK_THROWS_AS((void)query::parse_query("p(X) :- q(X, X).\nr(X) :- q(X)."),
                    QueryParseError);
}

TEST_CASE("negating a derived predicate is rejected") {
    CHECK_THROWS_WITH_AS(
        (void)query::parse_query("p(X) :- node(X, \"fact\").\n"
                                 "q(X) :- node(X, L), not p(X)."),
        "line 2, column 25: negation is restricted to built-in predicates; \"p\" is not one",
        QueryParseError);
}

TEST_CASE("a predicate named not is still callable") {
    CHECK_NOTHROW((void)query::parse_query("p(X) :- not(X)."));
    FlowGraph graph = build_fixture("diamond.rfg.json");
    // not/1 has no facts, so the rule yields nothing.
    CHECK(eval_one("p(X) :- not(X).", graph).tuples.empty());
}

TEST_CASE("unknown body predicates act as empty relations") {
    FlowGraph graph = build_fixture("diamond.rfg.json");
    CHECK(eval_one("p(X) :- mystery(X).", graph).tuples.empty());
}

TEST_CASE("evaluating over an empty graph yields empty sets") {
    FlowGraph graph = build_fixture("empty.rfg.json");
    CHECK(eval_one("p(X) :- node(X, L).", graph).tuples.empty());
}

TEST_CASE("evaluate_predicate selects one derived relation") {
    FlowGraph graph = build_fixture("verify_span.rfg.json");
    const std::string source = "a(X) :- node(X, \"planning\").\n"
                               "b(X) :- node(X, \"reasoning\").\n";
    const auto program = query::parse_query(source);
    CHECK(rows(query::evaluate_predicate(program, graph, "a")) ==
          std::vector<std::string>{"trace40"});
    CHECK(rows(query::evaluate_predicate(program, graph, "b")) ==
          std::vector<std::string>{"trace39", "trace41"});
    CHECK_THROWS_AS((void)query::evaluate_predicate(program, graph, "zzz"),
                    std::invalid_argument);
}

TEST_CASE("a derived predicate may not collide with a fact predicate") {
    query::FactBase base = query::parse_facts("p(a).\n");
    const auto program = query::parse_query("p(X) :- q(X).");
    CHECK_THROWS_AS((void)query::evaluate(program, base), ParseError);
}

TEST_CASE("strategies agree on random graphs") {
    const std::vector<std::string> programs = {
        "anc(X, Y) :- edge(X, Y, \"premise-conclusion\").\n"
        "anc(X, Z) :- anc(X, Y), edge(Y, Z, \"premise-conclusion\").\n",
        "odd_path(X, Y) :- edge(X, Y, \"support\").\n"
        "odd_path(X, Z) :- even_path(X, Y), edge(Y, Z, \"support\").\n"
        "even_path(X, Z) :- odd_path(X, Y), edge(Y, Z, \"support\").\n",
        "p(X, Y) :- connected(X, Y), not edge(X, Y, \"refute\").",
    };
    for (std::uint32_t seed = 300; seed < 330; ++seed) {
        RandomGraphOptions options;
        options.density = 0.15 + 0.1 * (seed % 4);
        AnnotationDocument doc = random_document(seed, options);
        BuildResult built = build_graph(doc, Strictness::Strict);
        REQUIRE(built.graph.has_value());
        for (const std::string& source : programs) {
            CAPTURE(seed);
            const auto program = query::parse_query(source);
            const auto semi = query::evaluate(program, *built.graph, EvalStrategy::SemiNaive);
            const auto naive = query::evaluate(program, *built.graph, EvalStrategy::Naive);
            REQUIRE(semi.size() == naive.size());
            for (std::size_t i = 0; i < semi.size(); ++i)
                CHECK(semi[i].tuples == naive[i].tuples);
        }
    }
}
