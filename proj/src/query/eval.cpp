#include "eval.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>

#include "facts.hpp"

namespace rf::query {

namespace {

const Relation kEmptyRelation{};

bool compare(const Value& lhs, CmpOp op, const Value& rhs) {
    // Cross-type comparisons never hold; they surface as empty joins.
    if (lhs.index() != rhs.index()) return false;
    const auto ordering = lhs <=> rhs;
    switch (op) {
    case CmpOp::Eq: return ordering == 0;
    case CmpOp::Ne: return ordering != 0;
    case CmpOp::Lt: return ordering < 0;
    case CmpOp::Le: return ordering <= 0;
    case CmpOp::Gt: return ordering > 0;
    case CmpOp::Ge: return ordering >= 0;
    }
    return false;
}

using Env = std::map<std::string, Value>;

// Join order for one rule: comparisons and negations run as soon as their
// variables are bound; otherwise the positive atom sharing the most bound
// variables comes next (ties by original position).
std::vector<std::size_t> plan_order(const Rule& rule) {
    const std::size_t n = rule.body.size();
    std::vector<std::size_t> order;
    std::vector<bool> used(n, false);
    std::set<std::string> bound;

    const auto vars_bound = [&](const Literal& literal) {
        std::vector<const Term*> terms;
        if (const auto* atom = std::get_if<Atom>(&literal))
            for (const Term& t : atom->args) terms.push_back(&t);
        else {
            const auto& cmp = std::get<Comparison>(literal);
            terms = {&cmp.lhs, &cmp.rhs};
        }
        for (const Term* t : terms)
            if (const auto* var = std::get_if<VarRef>(t))
                if (!bound.count(var->name)) return false;
        return true;
    };

    while (order.size() < n) {
        std::size_t next = n;
        // Filters (comparisons, negated atoms) as soon as they are ground.
        for (std::size_t i = 0; i < n && next == n; ++i) {
            if (used[i]) continue;
            const auto* atom = std::get_if<Atom>(&rule.body[i]);
            const bool is_filter = !atom || atom->negated;
            if (is_filter && vars_bound(rule.body[i])) next = i;
        }
        if (next == n) {
            // Most-bound positive atom.
            std::size_t best_score = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (used[i]) continue;
                const auto* atom = std::get_if<Atom>(&rule.body[i]);
                if (!atom || atom->negated) continue;
                std::size_t score = 1;
                for (const Term& t : atom->args)
                    if (const auto* var = std::get_if<VarRef>(&t))
                        if (bound.count(var->name)) ++score;
                if (next == n || score > best_score) {
                    next = i;
                    best_score = score;
                }
            }
        }
        // Safety validation guarantees progress: every remaining filter
        // becomes ground once all positive atoms are placed.
        assert(next < n);
        used[next] = true;
        order.push_back(next);
        if (const auto* atom = std::get_if<Atom>(&rule.body[next]); atom && !atom->negated)
            for (const Term& t : atom->args)
                if (const auto* var = std::get_if<VarRef>(&t)) bound.insert(var->name);
    }
    return order;
}

class Engine {
public:
    Engine(const QueryProgram& program, const FactBase& base) : program_(program), base_(base) {
        for (const std::string& pred : program.derived) {
            if (base_.find(pred))
                throw ParseError("predicate \"" + pred +
                                 "\" is declared both as a fact and as a rule head");
            idb_[pred].arity = program.arities.at(pred);
        }
        for (const Rule& rule : program.rules) plans_.push_back(plan_order(rule));
    }

    std::vector<MatchSet> run(EvalStrategy strategy) {
        if (strategy == EvalStrategy::Naive)
            run_naive();
        else
            run_semi_naive();
        std::vector<MatchSet> out;
        for (const std::string& pred : program_.derived) {
            MatchSet set;
            set.predicate = pred;
            set.arity = program_.arities.at(pred);
            const Relation& rel = idb_.at(pred);
            set.tuples.assign(rel.tuples.begin(), rel.tuples.end());
            std::sort(set.tuples.begin(), set.tuples.end(), rendered_less);
            out.push_back(std::move(set));
        }
        return out;
    }

private:
    const QueryProgram& program_;
    const FactBase& base_;
    std::map<std::string, Relation> idb_;
    std::vector<std::vector<std::size_t>> plans_;

    bool is_derived(const std::string& pred) const { return idb_.count(pred) != 0; }

    // Relation a positive body atom reads from, ignoring delta handling.
    const Relation& full_relation(const std::string& pred) const {
        if (const auto it = idb_.find(pred); it != idb_.end()) return it->second;
        if (const Relation* rel = base_.find(pred)) return *rel;
        return kEmptyRelation; // unknown predicate: empty join by design
    }

    // Fires one rule. delta_literal designates the body literal that must
    // read from `delta` instead of the full relation (semi-naive); pass
    // npos to read everything from full relations.
    void fire(std::size_t rule_index, std::size_t delta_literal, const Relation* delta,
              std::set<Tuple>& out) {
        const Rule& rule = program_.rules[rule_index];
        const std::vector<std::size_t>& order = plans_[rule_index];
        Env env;

        const std::function<void(std::size_t)> step = [&](std::size_t depth) {
            if (depth == order.size()) {
                Tuple tuple;
                tuple.reserve(rule.head.args.size());
                for (const Term& t : rule.head.args) {
                    if (const auto* var = std::get_if<VarRef>(&t))
                        tuple.push_back(env.at(var->name));
                    else
                        tuple.push_back(std::get<Value>(t));
                }
                out.insert(std::move(tuple));
                return;
            }
            const std::size_t index = order[depth];
            const Literal& literal = rule.body[index];

            if (const auto* cmp = std::get_if<Comparison>(&literal)) {
                const auto resolve = [&](const Term& t) -> const Value& {
                    if (const auto* var = std::get_if<VarRef>(&t)) return env.at(var->name);
                    return std::get<Value>(t);
                };
                if (compare(resolve(cmp->lhs), cmp->op, resolve(cmp->rhs))) step(depth + 1);
                return;
            }

            const Atom& atom = std::get<Atom>(literal);
            if (atom.negated) {
                Tuple probe;
                probe.reserve(atom.args.size());
                for (const Term& t : atom.args) {
                    if (const auto* var = std::get_if<VarRef>(&t))
                        probe.push_back(env.at(var->name));
                    else
                        probe.push_back(std::get<Value>(t));
                }
                if (!full_relation(atom.predicate).contains(probe)) step(depth + 1);
                return;
            }

            const Relation& relation = (index == delta_literal && delta != nullptr)
                                           ? *delta
                                           : full_relation(atom.predicate);
            for (const Tuple& tuple : relation.tuples) {
                std::vector<std::string> bound_here;
                bool match = true;
                for (std::size_t k = 0; k < atom.args.size() && match; ++k) {
                    const Term& t = atom.args[k];
                    if (const auto* var = std::get_if<VarRef>(&t)) {
                        const auto it = env.find(var->name);
                        if (it == env.end()) {
                            env.emplace(var->name, tuple[k]);
                            bound_here.push_back(var->name);
                        } else if (it->second != tuple[k]) {
                            match = false;
                        }
                    } else if (std::get<Value>(t) != tuple[k]) {
                        match = false;
                    }
                }
                if (match) step(depth + 1);
                for (const std::string& name : bound_here) env.erase(name);
            }
        };
        step(0);
    }

    static constexpr std::size_t kNoDelta = static_cast<std::size_t>(-1);

    void run_naive() {
        bool changed = true;
        while (changed) {
            changed = false;
            std::map<std::string, std::set<Tuple>> buffers;
            for (std::size_t r = 0; r < program_.rules.size(); ++r)
                fire(r, kNoDelta, nullptr, buffers[program_.rules[r].head.predicate]);
            for (auto& [pred, tuples] : buffers) {
                Relation& rel = idb_.at(pred);
                for (auto& tuple : tuples)
                    if (rel.tuples.insert(tuple).second) changed = true;
            }
        }
    }

    // Derived-predicate dependency components (Tarjan), emitted callees-first.
    std::vector<std::vector<std::string>> dependency_components() const {
        std::map<std::string, std::vector<std::string>> adj;
        for (const Rule& rule : program_.rules) {
            auto& deps = adj[rule.head.predicate];
            for (const Literal& literal : rule.body)
                if (const auto* atom = std::get_if<Atom>(&literal))
                    if (!atom->negated && is_derived(atom->predicate))
                        deps.push_back(atom->predicate);
        }
        std::vector<std::vector<std::string>> components;
        std::map<std::string, int> index, lowlink;
        std::vector<std::string> stack;
        std::set<std::string> on_stack;
        int counter = 0;

        const std::function<void(const std::string&)> strongconnect = [&](const std::string& v) {
            index[v] = lowlink[v] = counter++;
            stack.push_back(v);
            on_stack.insert(v);
            for (const std::string& w : adj[v]) {
                if (!index.count(w)) {
                    strongconnect(w);
                    lowlink[v] = std::min(lowlink[v], lowlink[w]);
                } else if (on_stack.count(w)) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
            }
            if (lowlink[v] == index[v]) {
                std::vector<std::string> component;
                while (true) {
                    const std::string w = stack.back();
                    stack.pop_back();
                    on_stack.erase(w);
                    component.push_back(w);
                    if (w == v) break;
                }
                components.push_back(std::move(component));
            }
        };
        for (const std::string& pred : program_.derived)
            if (!index.count(pred)) strongconnect(pred);
        return components;
    }

    void run_semi_naive() {
        for (const std::vector<std::string>& component : dependency_components()) {
            const std::set<std::string> scc(component.begin(), component.end());

            std::vector<std::size_t> scc_rules;
            for (std::size_t r = 0; r < program_.rules.size(); ++r)
                if (scc.count(program_.rules[r].head.predicate)) scc_rules.push_back(r);

            // Body positions reading a predicate of this component.
            const auto recursive_positions = [&](std::size_t r) {
                std::vector<std::size_t> positions;
                const Rule& rule = program_.rules[r];
                for (std::size_t i = 0; i < rule.body.size(); ++i)
                    if (const auto* atom = std::get_if<Atom>(&rule.body[i]))
                        if (!atom->negated && scc.count(atom->predicate)) positions.push_back(i);
                return positions;
            };

            // Seed round: every rule once against the full relations.
            std::map<std::string, Relation> delta;
            for (const std::string& pred : component) delta[pred].arity = idb_.at(pred).arity;
            for (const std::size_t r : scc_rules) {
                std::set<Tuple> buffer;
                fire(r, kNoDelta, nullptr, buffer);
                Relation& rel = idb_.at(program_.rules[r].head.predicate);
                Relation& d = delta.at(program_.rules[r].head.predicate);
                for (auto& tuple : buffer)
                    if (rel.tuples.insert(tuple).second) d.tuples.insert(tuple);
            }

            // Iterate recursive rules against the previous round's delta.
            while (true) {
                bool any_delta = false;
                for (const auto& [pred, rel] : delta) any_delta |= !rel.tuples.empty();
                if (!any_delta) break;

                std::map<std::string, std::set<Tuple>> buffers;
                for (const std::size_t r : scc_rules) {
                    const auto positions = recursive_positions(r);
                    auto& buffer = buffers[program_.rules[r].head.predicate];
                    for (const std::size_t position : positions) {
                        const auto* atom = std::get_if<Atom>(&program_.rules[r].body[position]);
                        fire(r, position, &delta.at(atom->predicate), buffer);
                    }
                }
                std::map<std::string, Relation> next_delta;
                for (const std::string& pred : component) next_delta[pred].arity = idb_.at(pred).arity;
                for (auto& [pred, tuples] : buffers) {
                    Relation& rel = idb_.at(pred);
                    for (auto& tuple : tuples)
                        if (rel.tuples.insert(tuple).second) next_delta.at(pred).tuples.insert(tuple);
                }
                delta = std::move(next_delta);
            }
        }
    }
};

} // namespace

bool rendered_less(const Tuple& a, const Tuple& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::string ra = render(a[i]);
        const std::string rb = render(b[i]);
        if (ra != rb) return ra < rb;
    }
    return a.size() < b.size();
}

std::vector<MatchSet> evaluate(const QueryProgram& program, const FactBase& base,
                               EvalStrategy strategy) {
    return Engine(program, base).run(strategy);
}

std::vector<MatchSet> evaluate(const QueryProgram& program, const FlowGraph& graph,
                               EvalStrategy strategy) {
    const FactBase base = ground_facts(graph);
    return Engine(program, base).run(strategy);
}

MatchSet evaluate_predicate(const QueryProgram& program, const FlowGraph& graph,
                            std::string_view predicate) {
    for (MatchSet& set : evaluate(program, graph))
        if (set.predicate == predicate) return std::move(set);
    throw std::invalid_argument("program does not derive predicate \"" + std::string(predicate) +
                                "\"");
}

} // namespace rf::query
