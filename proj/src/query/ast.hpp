#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rf::query {

// Constants are either integers (ordinals, distances) or strings (node ids,
// labels). Strings render bare; the variant order makes integers sort before
// strings under the default comparison used for set storage.
using Value = std::variant<std::int64_t, std::string>;

std::string render(const Value& value);

struct VarRef {
    std::string name;
    auto operator<=>(const VarRef&) const = default;
};

using Term = std::variant<VarRef, Value>;

inline bool is_variable(const Term& term) { return std::holds_alternative<VarRef>(term); }

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

std::string_view to_string(CmpOp op);

struct Atom {
    std::string predicate;
    std::vector<Term> args;
    bool negated = false;
    std::size_t line = 0;
    std::size_t column = 0;
};

struct Comparison {
    Term lhs;
    CmpOp op = CmpOp::Eq;
    Term rhs;
    std::size_t line = 0;
    std::size_t column = 0;
};

using Literal = std::variant<Atom, Comparison>;

struct Rule {
    Atom head;
    std::vector<Literal> body;
};

// A validated program: safe rules, consistent arities, negation only on the
// built-in relations, reserved names never redefined.
struct QueryProgram {
    std::vector<Rule> rules;
    std::vector<std::string> derived;           // head predicates, definition order
    std::map<std::string, std::size_t> arities; // every predicate used
};

using Tuple = std::vector<Value>;

struct Relation {
    std::size_t arity = 0;
    std::set<Tuple> tuples;
    bool contains(const Tuple& t) const { return tuples.count(t) != 0; }
};

// Extensional data: the five built-in relations when grounded from a graph,
// or whatever a fact file declares.
struct FactBase {
    std::map<std::string, Relation> relations;
    const Relation* find(std::string_view predicate) const {
        const auto it = relations.find(std::string(predicate));
        return it == relations.end() ? nullptr : &it->second;
    }
};

// Result tuples of one derived predicate, deduplicated and ordered
// lexicographically by rendered constants.
struct MatchSet {
    std::string predicate;
    std::size_t arity = 0;
    std::vector<Tuple> tuples;
};

bool is_builtin_predicate(std::string_view name);

// Canonical textual forms (used for tests and diagnostics).
std::string to_string(const Term& term);
std::string to_string(const Atom& atom);
std::string to_string(const Rule& rule);
std::string to_string(const QueryProgram& program);

} // namespace rf::query
