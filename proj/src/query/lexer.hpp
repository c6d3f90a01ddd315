#pragma once

// Shared tokenizer for rule programs and fact listings (internal).

#include <cstdint>
#include <string>
#include <string_view>

#include "../errors.hpp"
#include "ast.hpp"

namespace rf::query {

enum class TokenKind {
    Ident,
    Variable,
    String,
    Integer,
    LParen,
    RParen,
    Comma,
    Period,
    Implies, // ":-"
    Cmp,
    End,
};

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    std::int64_t number = 0;
    CmpOp op = CmpOp::Eq;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return token_; }

    Token take() {
        Token t = token_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const Token& at, const std::string& message) const {
        throw QueryParseError(at.line, at.column, message);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    Token token_;

    char current() const { return text_[pos_]; }
    bool done() const { return pos_ >= text_.size(); }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (!done()) {
            const char c = current();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else if (c == '%') {
                while (!done() && current() != '\n') bump();
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail_here(const std::string& message) const {
        throw QueryParseError(line_, column_, message);
    }

    static bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
    static bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    void advance() {
        skip_trivia();
        token_ = Token{};
        token_.line = line_;
        token_.column = column_;
        if (done()) {
            token_.kind = TokenKind::End;
            return;
        }
        const char c = current();
        if (is_lower(c)) {
            std::string text;
            while (!done() && (is_lower(current()) || is_digit(current()) || current() == '_' ||
                               current() == '-')) {
                text += current();
                bump();
            }
            token_.kind = TokenKind::Ident;
            token_.text = std::move(text);
            return;
        }
        if (is_upper(c)) {
            std::string text;
            while (!done() && (is_lower(current()) || is_upper(current()) ||
                               is_digit(current()) || current() == '_')) {
                text += current();
                bump();
            }
            token_.kind = TokenKind::Variable;
            token_.text = std::move(text);
            return;
        }
        if (is_digit(c) || (c == '-' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]))) {
            std::string digits;
            if (c == '-') {
                digits += '-';
                bump();
            }
            while (!done() && is_digit(current())) {
                digits += current();
                bump();
            }
            try {
                token_.number = std::stoll(digits);
            } catch (const std::out_of_range&) {
                fail(token_, "integer literal out of range");
            }
            token_.kind = TokenKind::Integer;
            return;
        }
        if (c == '"') {
            bump();
            std::string text;
            while (true) {
                if (done()) fail(token_, "unterminated string literal");
                const char ch = current();
                if (ch == '"') {
                    bump();
                    break;
                }
                if (ch == '\\') {
                    bump();
                    if (done()) fail(token_, "unterminated string literal");
                    switch (current()) {
                    case '"': text += '"'; break;
                    case '\\': text += '\\'; break;
                    case 'n': text += '\n'; break;
                    case 't': text += '\t'; break;
                    case 'r': text += '\r'; break;
                    default: fail_here(std::string("invalid escape \"\\") + current() + "\"");
                    }
                    bump();
                } else {
                    text += ch;
                    bump();
                }
            }
            token_.kind = TokenKind::String;
            token_.text = std::move(text);
            return;
        }
        switch (c) {
        case '(': bump(); token_.kind = TokenKind::LParen; return;
        case ')': bump(); token_.kind = TokenKind::RParen; return;
        case ',': bump(); token_.kind = TokenKind::Comma; return;
        case '.': bump(); token_.kind = TokenKind::Period; return;
        case ':':
            bump();
            if (done() || current() != '-') fail(token_, "expected \"-\" after \":\"");
            bump();
            token_.kind = TokenKind::Implies;
            return;
        case '=':
            bump();
            if (done() || current() != '=') fail(token_, "expected \"==\"");
            bump();
            token_.kind = TokenKind::Cmp;
            token_.op = CmpOp::Eq;
            return;
        case '!':
            bump();
            if (done() || current() != '=') fail(token_, "expected \"!=\"");
            bump();
            token_.kind = TokenKind::Cmp;
            token_.op = CmpOp::Ne;
            return;
        case '<':
            bump();
            token_.kind = TokenKind::Cmp;
            token_.op = CmpOp::Lt;
            if (!done() && current() == '=') {
                bump();
                token_.op = CmpOp::Le;
            }
            return;
        case '>':
            bump();
            token_.kind = TokenKind::Cmp;
            token_.op = CmpOp::Gt;
            if (!done() && current() == '=') {
                bump();
                token_.op = CmpOp::Ge;
            }
            return;
        default:
            fail_here(std::string("unexpected character \"") + c + "\"");
        }
    }
};

} // namespace rf::query
