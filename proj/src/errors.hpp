#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rf {

// Malformed input text (annotation documents, query programs, fact files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse failure in query/fact text; carries the 1-based source position.
struct QueryParseError : ParseError {
    std::size_t line;
    std::size_t column;
    QueryParseError(std::size_t line_, std::size_t column_, const std::string& message)
        : ParseError("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                     ": " + message),
          line(line_),
          column(column_) {}
};

// A node id was passed that is not present in the graph.
struct UnknownNodeError : std::invalid_argument {
    std::string id;
    explicit UnknownNodeError(const std::string& id_)
        : std::invalid_argument("unknown node id: " + id_), id(id_) {}
};

// An operation was called on a graph that cannot support it
// (e.g. compression of a graph without a conclusion node).
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

// The graph cannot be rendered in the requested output format.
struct ExportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rf
