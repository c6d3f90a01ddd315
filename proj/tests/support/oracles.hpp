#pragma once

// Reference implementations used to cross-check library results. Each is
// deliberately the most direct algorithm available — DFS per source for
// reachability, Floyd–Warshall for distances, reverse BFS over raw records
// for ancestors, and full assignment enumeration over the active domain for
// rule programs — sharing no code with the library's own data paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "document.hpp"
#include "query/ast.hpp"

namespace rf::test {

inline constexpr int kUnreachable = -1;

// reach[s][d] is true iff a path of >= 1 edges leads from s to d.
inline std::vector<std::vector<bool>>
oracle_reachability(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::vector<std::size_t>> succ(n);
    for (const auto& [s, d] : edges) succ[s].push_back(d);
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (const std::size_t v : succ[u])
                if (!reach[s][v]) {
                    reach[s][v] = true;
                    stack.push_back(v);
                }
        }
    }
    return reach;
}

// Shortest path lengths by Floyd–Warshall; kUnreachable when no path exists.
inline std::vector<std::vector<int>>
oracle_distances(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    constexpr int kInf = 1 << 29;
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) dist[i][i] = 0;
    for (const auto& [s, d] : edges) dist[s][d] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
    for (auto& row : dist)
        for (int& d : row)
            if (d >= kInf) d = kUnreachable;
    return dist;
}

// Ids of every node reaching any seed through >= 1 edges, seeds excluded.
inline std::set<std::string> oracle_ancestors(const AnnotationDocument& doc,
                                              const std::set<std::string>& seeds) {
    std::map<std::string, std::vector<std::string>> pred;
    for (const auto& e : doc.edges) pred[e.dst].push_back(e.src);
    std::set<std::string> result;
    std::vector<std::string> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
        const std::string current = queue.back();
        queue.pop_back();
        for (const auto& p : pred[current])
            if (result.insert(p).second) queue.push_back(p);
    }
    for (const auto& s : seeds) result.erase(s);
    return result;
}

// The node ids a conclusion-anchored compression must keep: the conclusion
// nodes, everything reaching them, and all context nodes.
inline std::set<std::string> oracle_kept_ids(const AnnotationDocument& doc) {
    std::set<std::string> conclusions;
    std::set<std::string> kept;
    for (const auto& node : doc.nodes) {
        if (node.label == "conclusion") conclusions.insert(node.id);
        if (node.label == "context") kept.insert(node.id);
    }
    auto ancestors = oracle_ancestors(doc, conclusions);
    kept.insert(ancestors.begin(), ancestors.end());
    kept.insert(conclusions.begin(), conclusions.end());
    return kept;
}

// Grounds the built-in relations straight from a document, using the oracle
// graph algorithms above (the document must already be a valid graph).
inline query::FactBase oracle_base(const AnnotationDocument& doc) {
    const std::size_t n = doc.nodes.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[doc.nodes[i].id] = i;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : doc.edges) edges.emplace_back(index.at(e.src), index.at(e.dst));

    query::FactBase base;
    auto& node_rel = base.relations["node"];
    node_rel.arity = 2;
    auto& edge_rel = base.relations["edge"];
    edge_rel.arity = 3;
    auto& connected_rel = base.relations["connected"];
    connected_rel.arity = 2;
    auto& distance_rel = base.relations["distance"];
    distance_rel.arity = 3;
    auto& order_rel = base.relations["order"];
    order_rel.arity = 2;

    for (std::size_t i = 0; i < n; ++i) {
        node_rel.tuples.insert({doc.nodes[i].id, doc.nodes[i].label});
        order_rel.tuples.insert({doc.nodes[i].id, static_cast<std::int64_t>(i)});
    }
    for (const auto& e : doc.edges) edge_rel.tuples.insert({e.src, e.dst, e.label});

    const auto reach = oracle_reachability(n, edges);
    const auto dist = oracle_distances(n, edges);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (reach[i][j]) connected_rel.tuples.insert({doc.nodes[i].id, doc.nodes[j].id});
            if (dist[i][j] != kUnreachable)
                distance_rel.tuples.insert(
                    {doc.nodes[i].id, doc.nodes[j].id, static_cast<std::int64_t>(dist[i][j])});
        }
    return base;
}

namespace detail {

inline bool oracle_compare(const query::Value& lhs, query::CmpOp op, const query::Value& rhs) {
    if (lhs.index() != rhs.index()) return false; // cross-type never holds
    int sign = 0;
    if (std::holds_alternative<std::int64_t>(lhs)) {
        const auto a = std::get<std::int64_t>(lhs);
        const auto b = std::get<std::int64_t>(rhs);
        sign = a < b ? -1 : (a == b ? 0 : 1);
    } else {
        const auto& a = std::get<std::string>(lhs);
        const auto& b = std::get<std::string>(rhs);
        sign = a < b ? -1 : (a == b ? 0 : 1);
    }
    switch (op) {
    case query::CmpOp::Eq: return sign == 0;
    case query::CmpOp::Ne: return sign != 0;
    case query::CmpOp::Lt: return sign < 0;
    case query::CmpOp::Le: return sign <= 0;
    case query::CmpOp::Gt: return sign > 0;
    case query::CmpOp::Ge: return sign >= 0;
    }
    return false;
}

using Assignment = std::map<std::string, query::Value>;

inline query::Value ground_term(const query::Term& term, const Assignment& assignment) {
    if (std::holds_alternative<query::Value>(term)) return std::get<query::Value>(term);
    return assignment.at(std::get<query::VarRef>(term).name);
}

inline bool literal_holds(const query::Literal& literal, const Assignment& assignment,
                          const std::map<std::string, std::set<query::Tuple>>& rels) {
    if (std::holds_alternative<query::Comparison>(literal)) {
        const auto& cmp = std::get<query::Comparison>(literal);
        return oracle_compare(ground_term(cmp.lhs, assignment), cmp.op,
                              ground_term(cmp.rhs, assignment));
    }
    const auto& atom = std::get<query::Atom>(literal);
    query::Tuple tuple;
    for (const auto& arg : atom.args) tuple.push_back(ground_term(arg, assignment));
    const auto it = rels.find(atom.predicate);
    const bool present = it != rels.end() && it->second.count(tuple) > 0;
    return atom.negated ? !present : present;
}

} // namespace detail

// Least-model computation by brute force: every pass tries every assignment
// of each rule's variables over the whole active domain and inserts the
// grounded head whenever the body holds; repeats until nothing new appears.
inline std::map<std::string, std::set<query::Tuple>>
oracle_evaluate(const query::QueryProgram& program, const query::FactBase& base) {
    std::set<query::Value> domain_set;
    std::map<std::string, std::set<query::Tuple>> rels;
    for (const auto& [name, relation] : base.relations) {
        for (const auto& tuple : relation.tuples) {
            rels[name].insert(tuple);
            for (const auto& value : tuple) domain_set.insert(value);
        }
    }
    const auto add_term_constant = [&](const query::Term& term) {
        if (std::holds_alternative<query::Value>(term))
            domain_set.insert(std::get<query::Value>(term));
    };
    for (const auto& rule : program.rules) {
        for (const auto& arg : rule.head.args) add_term_constant(arg);
        for (const auto& literal : rule.body) {
            if (std::holds_alternative<query::Atom>(literal)) {
                for (const auto& arg : std::get<query::Atom>(literal).args)
                    add_term_constant(arg);
            } else {
                add_term_constant(std::get<query::Comparison>(literal).lhs);
                add_term_constant(std::get<query::Comparison>(literal).rhs);
            }
        }
    }
    const std::vector<query::Value> domain(domain_set.begin(), domain_set.end());

    // Distinct variable names per rule, in first-appearance order.
    std::vector<std::vector<std::string>> rule_vars;
    for (const auto& rule : program.rules) {
        std::vector<std::string> vars;
        const auto add_var = [&](const query::Term& term) {
            if (!std::holds_alternative<query::VarRef>(term)) return;
            const auto& name = std::get<query::VarRef>(term).name;
            if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
        };
        for (const auto& arg : rule.head.args) add_var(arg);
        for (const auto& literal : rule.body) {
            if (std::holds_alternative<query::Atom>(literal)) {
                for (const auto& arg : std::get<query::Atom>(literal).args) add_var(arg);
            } else {
                add_var(std::get<query::Comparison>(literal).lhs);
                add_var(std::get<query::Comparison>(literal).rhs);
            }
        }
        rule_vars.push_back(std::move(vars));
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r = 0; r < program.rules.size(); ++r) {
            const auto& rule = program.rules[r];
            const auto& vars = rule_vars[r];
            if (!vars.empty() && domain.empty()) continue; // no assignments exist
            std::vector<std::size_t> pick(vars.size(), 0);
            while (true) {
                detail::Assignment assignment;
                for (std::size_t v = 0; v < vars.size(); ++v)
                    assignment.emplace(vars[v], domain[pick[v]]);
                bool holds = true;
                for (const auto& literal : rule.body)
                    if (!detail::literal_holds(literal, assignment, rels)) {
                        holds = false;
                        break;
                    }
                if (holds) {
                    query::Tuple head;
                    for (const auto& arg : rule.head.args)
                        head.push_back(detail::ground_term(arg, assignment));
                    if (rels[rule.head.predicate].insert(head).second) changed = true;
                }
                // Odometer over the assignment space.
                std::size_t v = 0;
                for (; v < vars.size(); ++v) {
                    if (++pick[v] < domain.size()) break;
                    pick[v] = 0;
                }
                if (v == vars.size()) break;
            }
        }
    }

    std::map<std::string, std::set<query::Tuple>> result;
    for (const auto& pred : program.derived) result[pred] = rels[pred];
    return result;
}

} // namespace rf::test
