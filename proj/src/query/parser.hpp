#pragma once

#include <string_view>

#include "../errors.hpp"
#include "ast.hpp"

namespace rf::query {

// Parses and validates a rule program:
//   program := rule+
//   rule    := atom ":-" body "."
//   body    := literal ("," literal)*
//   literal := ["not"] atom | term cmp term
//   atom    := ident "(" term ("," term)* ")"
//   term    := VARIABLE | STRING | INTEGER
// "%" starts a line comment. Throws QueryParseError (line/column) for syntax
// errors, unsafe rules, redefinition of built-in predicates, negation of a
// non-built-in predicate, arity mismatches, and constant comparisons across
// types.
QueryProgram parse_query(std::string_view text);

} // namespace rf::query
