#include "parser.hpp"

#include <set>

#include "lexer.hpp"

namespace rf::query {

namespace {

constexpr struct {
    std::string_view name;
    std::size_t arity;
} kBuiltins[] = {
    {"node", 2}, {"edge", 3}, {"connected", 2}, {"distance", 3}, {"order", 2},
};

std::string escape_string(std::string_view text) {
    std::string out;
    for (const char c : text) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default: out += c;
        }
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) {}

    QueryProgram parse() {
        QueryProgram program;
        if (lexer_.peek().kind == TokenKind::End)
            lexer_.fail(lexer_.peek(), "program must contain at least one rule");
        while (lexer_.peek().kind != TokenKind::End) program.rules.push_back(parse_rule());
        validate(program);
        return program;
    }

private:
    Lexer lexer_;

    Token expect(TokenKind kind, const char* what) {
        if (lexer_.peek().kind != kind) lexer_.fail(lexer_.peek(), std::string("expected ") + what);
        return lexer_.take();
    }

    Term parse_term() {
        const Token t = lexer_.take();
        switch (t.kind) {
        case TokenKind::Variable: return VarRef{t.text};
        case TokenKind::String: return Value{t.text};
        case TokenKind::Integer: return Value{t.number};
        default: lexer_.fail(t, "expected a variable, string, or integer");
        }
    }

    Atom parse_atom(bool negated) {
        return parse_atom_named(expect(TokenKind::Ident, "a predicate name"), negated);
    }

    Atom parse_atom_named(const Token& name, bool negated) {
        Atom atom;
        atom.predicate = name.text;
        atom.negated = negated;
        atom.line = name.line;
        atom.column = name.column;
        expect(TokenKind::LParen, "\"(\"");
        atom.args.push_back(parse_term());
        while (lexer_.peek().kind == TokenKind::Comma) {
            lexer_.take();
            atom.args.push_back(parse_term());
        }
        expect(TokenKind::RParen, "\")\"");
        return atom;
    }

    Literal parse_literal() {
        const Token& t = lexer_.peek();
        if (t.kind == TokenKind::Ident) {
            // "not" is a keyword only when it prefixes another atom; followed
            // directly by "(" it is an ordinary predicate name.
            if (t.text == "not") {
                const Token not_token = lexer_.take();
                if (lexer_.peek().kind == TokenKind::Ident) return parse_atom(true);
                if (lexer_.peek().kind == TokenKind::LParen)
                    return parse_atom_named(not_token, false);
                lexer_.fail(not_token, "expected an atom after \"not\"");
            }
            return parse_atom(false);
        }
        Comparison cmp;
        cmp.line = t.line;
        cmp.column = t.column;
        cmp.lhs = parse_term();
        const Token op = expect(TokenKind::Cmp, "a comparison operator");
        cmp.op = op.op;
        cmp.rhs = parse_term();
        return cmp;
    }

    Rule parse_rule() {
        Rule rule;
        rule.head = parse_atom(false);
        expect(TokenKind::Implies, "\":-\"");
        rule.body.push_back(parse_literal());
        while (lexer_.peek().kind == TokenKind::Comma) {
            lexer_.take();
            rule.body.push_back(parse_literal());
        }
        expect(TokenKind::Period, "\".\"");
        return rule;
    }

    // -- semantic checks -----------------------------------------------------

    static void collect_vars(const Atom& atom, std::set<std::string>& out) {
        for (const Term& term : atom.args)
            if (const auto* var = std::get_if<VarRef>(&term)) out.insert(var->name);
    }

    void check_arity(QueryProgram& program, const Atom& atom) {
        for (const auto& builtin : kBuiltins)
            if (atom.predicate == builtin.name && atom.args.size() != builtin.arity)
                throw QueryParseError(atom.line, atom.column,
                                      "built-in predicate \"" + atom.predicate + "\" takes " +
                                          std::to_string(builtin.arity) + " arguments, got " +
                                          std::to_string(atom.args.size()));
        const auto [it, inserted] = program.arities.try_emplace(atom.predicate, atom.args.size());
        if (!inserted && it->second != atom.args.size())
            throw QueryParseError(atom.line, atom.column,
                                  "predicate \"" + atom.predicate + "\" used with arity " +
                                      std::to_string(atom.args.size()) + " but defined with " +
                                      std::to_string(it->second));
    }

    void validate(QueryProgram& program) {
        std::set<std::string> derived_seen;
        for (const Rule& rule : program.rules) {
            if (is_builtin_predicate(rule.head.predicate))
                throw QueryParseError(rule.head.line, rule.head.column,
                                      "cannot redefine built-in predicate \"" +
                                          rule.head.predicate + "\"");
            if (derived_seen.insert(rule.head.predicate).second)
                program.derived.push_back(rule.head.predicate);
        }
        for (const Rule& rule : program.rules) {
            check_arity(program, rule.head);
            for (const Literal& literal : rule.body)
                if (const auto* atom = std::get_if<Atom>(&literal)) check_arity(program, *atom);
        }
        for (const Rule& rule : program.rules) {
            std::set<std::string> positive;
            for (const Literal& literal : rule.body)
                if (const auto* atom = std::get_if<Atom>(&literal); atom && !atom->negated)
                    collect_vars(*atom, positive);

            std::set<std::string> head_vars;
            collect_vars(rule.head, head_vars);
            for (const std::string& var : head_vars)
                if (!positive.count(var))
                    throw QueryParseError(rule.head.line, rule.head.column,
                                          "unsafe rule: head variable \"" + var +
                                              "\" is not bound by a positive body atom");

            for (const Literal& literal : rule.body) {
                if (const auto* atom = std::get_if<Atom>(&literal)) {
                    if (!atom->negated) continue;
                    if (!is_builtin_predicate(atom->predicate))
                        throw QueryParseError(atom->line, atom->column,
                                              "negation is restricted to built-in predicates; \"" +
                                                  atom->predicate + "\" is not one");
                    std::set<std::string> vars;
                    collect_vars(*atom, vars);
                    for (const std::string& var : vars)
                        if (!positive.count(var))
                            throw QueryParseError(atom->line, atom->column,
                                                  "unsafe rule: variable \"" + var +
                                                      "\" in a negated atom is not bound by a "
                                                      "positive body atom");
                } else {
                    const auto& cmp = std::get<Comparison>(literal);
                    for (const Term* side : {&cmp.lhs, &cmp.rhs})
                        if (const auto* var = std::get_if<VarRef>(side))
                            if (!positive.count(var->name))
                                throw QueryParseError(cmp.line, cmp.column,
                                                      "unsafe rule: variable \"" + var->name +
                                                          "\" in a comparison is not bound by a "
                                                          "positive body atom");
                    const auto* lhs = std::get_if<Value>(&cmp.lhs);
                    const auto* rhs = std::get_if<Value>(&cmp.rhs);
                    if (lhs && rhs && lhs->index() != rhs->index())
                        throw QueryParseError(cmp.line, cmp.column,
                                              "cannot compare an integer with a string");
                }
            }
        }
    }
};

} // namespace

QueryProgram parse_query(std::string_view text) {
    return Parser(text).parse();
}

bool is_builtin_predicate(std::string_view name) {
    for (const auto& builtin : kBuiltins)
        if (name == builtin.name) return true;
    return false;
}

std::string render(const Value& value) {
    if (const auto* n = std::get_if<std::int64_t>(&value)) return std::to_string(*n);
    return std::get<std::string>(value);
}

std::string_view to_string(CmpOp op) {
    switch (op) {
    case CmpOp::Eq: return "==";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
    }
    return "";
}

std::string to_string(const Term& term) {
    if (const auto* var = std::get_if<VarRef>(&term)) return var->name;
    const Value& value = std::get<Value>(term);
    if (const auto* n = std::get_if<std::int64_t>(&value)) return std::to_string(*n);
    return "\"" + escape_string(std::get<std::string>(value)) + "\"";
}

std::string to_string(const Atom& atom) {
    std::string out = atom.negated ? "not " : "";
    out += atom.predicate;
    out += "(";
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
        if (i) out += ", ";
        out += to_string(atom.args[i]);
    }
    out += ")";
    return out;
}

std::string to_string(const Rule& rule) {
    std::string out = to_string(rule.head) + " :- ";
    for (std::size_t i = 0; i < rule.body.size(); ++i) {
        if (i) out += ", ";
        if (const auto* atom = std::get_if<Atom>(&rule.body[i])) {
            out += to_string(*atom);
        } else {
            const auto& cmp = std::get<Comparison>(rule.body[i]);
            out += to_string(cmp.lhs);
            out += " ";
            out += to_string(cmp.op);
            out += " ";
            out += to_string(cmp.rhs);
        }
    }
    out += ".";
    return out;
}

std::string to_string(const QueryProgram& program) {
    std::string out;
    for (const Rule& rule : program.rules) {
        out += to_string(rule);
        out += "\n";
    }
    return out;
}

} // namespace rf::query
