#include "facts.hpp"

#include "lexer.hpp"

namespace rf::query {

FactBase ground_facts(const FlowGraph& graph) {
    FactBase base;
    Relation& node_rel = base.relations["node"];
    node_rel.arity = 2;
    Relation& edge_rel = base.relations["edge"];
    edge_rel.arity = 3;
    Relation& connected_rel = base.relations["connected"];
    connected_rel.arity = 2;
    Relation& distance_rel = base.relations["distance"];
    distance_rel.arity = 3;
    Relation& order_rel = base.relations["order"];
    order_rel.arity = 2;

    for (const Node& node : graph.nodes()) {
        node_rel.tuples.insert({Value{node.id}, Value{std::string(to_string(node.label))}});
        order_rel.tuples.insert({Value{node.id}, Value{static_cast<std::int64_t>(node.ordinal)}});
    }
    for (const Edge& e : graph.edges())
        edge_rel.tuples.insert({Value{graph.node(e.src).id}, Value{graph.node(e.dst).id},
                                Value{std::string(to_string(e.label))}});

    const std::size_t n = graph.node_count();
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            const auto d = graph.distance_at(x, y);
            if (!d) continue;
            distance_rel.tuples.insert(
                {Value{graph.node(x).id}, Value{graph.node(y).id}, Value{*d}});
            if (*d >= 1)
                connected_rel.tuples.insert({Value{graph.node(x).id}, Value{graph.node(y).id}});
        }
    return base;
}

FactBase parse_facts(std::string_view text) {
    FactBase base;
    Lexer lexer(text);
    while (lexer.peek().kind != TokenKind::End) {
        if (lexer.peek().kind != TokenKind::Ident)
            lexer.fail(lexer.peek(), "expected a predicate name");
        const Token name = lexer.take();
        if (lexer.peek().kind != TokenKind::LParen) lexer.fail(lexer.peek(), "expected \"(\"");
        lexer.take();
        Tuple tuple;
        while (true) {
            const Token term = lexer.take();
            switch (term.kind) {
            case TokenKind::Ident: tuple.push_back(Value{term.text}); break;
            case TokenKind::String: tuple.push_back(Value{term.text}); break;
            case TokenKind::Integer: tuple.push_back(Value{term.number}); break;
            default: lexer.fail(term, "expected an atom, string, or integer");
            }
            if (lexer.peek().kind == TokenKind::Comma) {
                lexer.take();
                continue;
            }
            break;
        }
        if (lexer.peek().kind != TokenKind::RParen) lexer.fail(lexer.peek(), "expected \")\"");
        lexer.take();
        if (lexer.peek().kind != TokenKind::Period)
            lexer.fail(lexer.peek(), "expected \".\" after fact");
        lexer.take();

        auto [it, inserted] = base.relations.try_emplace(name.text);
        if (inserted) {
            it->second.arity = tuple.size();
        } else if (it->second.arity != tuple.size()) {
            lexer.fail(name, "predicate \"" + name.text + "\" used with arity " +
                                 std::to_string(tuple.size()) + " but earlier facts have " +
                                 std::to_string(it->second.arity));
        }
        it->second.tuples.insert(std::move(tuple));
    }
    return base;
}

} // namespace rf::query
