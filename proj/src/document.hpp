#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace rf {

struct NodeRecord {
    std::string id;
    std::string label;
    std::string text;
    bool operator==(const NodeRecord&) const = default;
};

struct EdgeRecord {
    std::string src;
    std::string dst;
    std::string label;
    bool operator==(const EdgeRecord&) const = default;
};

// A parsed annotation file, prior to semantic validation. Node order is the
// document order and defines the ordinals; labels are still raw strings so
// that build_graph can report every unknown label.
struct AnnotationDocument {
    std::vector<NodeRecord> nodes;
    std::vector<EdgeRecord> edges;
    std::map<std::string, std::string> meta;
    bool operator==(const AnnotationDocument&) const = default;
};

// Parses the JSON annotation format (top-level keys "nodes", "edges",
// "meta"). Throws ParseError on malformed syntax, duplicate object keys,
// missing required fields, or wrongly typed values.
AnnotationDocument load_document(std::string_view text);

// Deterministic rendering: fixed key order (nodes, edges, meta), two-space
// indent, meta sorted by key. load_document(serialize_document(d)) == d.
std::string serialize_document(const AnnotationDocument& doc);

} // namespace rf
