#include "document.hpp"

#include <set>
#include <vector>

#include <json.hpp>

namespace rf {

namespace {

using nlohmann::json;

// The DOM parser keeps the last value for a repeated key, so duplicates are
// caught during parsing via the event callback (one key set per open object).
json parse_checked(std::string_view text) {
    std::vector<std::set<json>> open_objects;
    auto callback = [&](int /*depth*/, json::parse_event_t event, json& parsed) -> bool {
        switch (event) {
        case json::parse_event_t::object_start:
            open_objects.emplace_back();
            break;
        case json::parse_event_t::key:
            if (!open_objects.back().insert(parsed).second)
                throw ParseError("duplicate key \"" + parsed.get<std::string>() + "\" in object");
            break;
        case json::parse_event_t::object_end:
            open_objects.pop_back();
            break;
        default:
            break;
        }
        return true;
    };
    try {
        return json::parse(text.begin(), text.end(), callback);
    } catch (const json::parse_error& e) {
        // Drop the library's "[json.exception...]" tag; keep the position info.
        std::string_view message = e.what();
        if (message.starts_with('[')) {
            if (const auto end = message.find("] "); end != std::string_view::npos)
                message.remove_prefix(end + 2);
        }
        throw ParseError(std::string(message));
    }
}

std::string require_string(const json& object, const char* field, const char* owner,
                           std::size_t position) {
    auto it = object.find(field);
    if (it == object.end())
        throw ParseError(std::string(owner) + " " + std::to_string(position) +
                         ": missing required field \"" + field + "\"");
    if (!it->is_string())
        throw ParseError(std::string(owner) + " " + std::to_string(position) + ": field \"" +
                         field + "\" must be a string");
    return it->get<std::string>();
}

} // namespace

AnnotationDocument load_document(std::string_view text) {
    const json root = parse_checked(text);
    if (!root.is_object()) throw ParseError("top level must be an object");

    auto nodes_it = root.find("nodes");
    if (nodes_it == root.end()) throw ParseError("missing required field \"nodes\"");
    if (!nodes_it->is_array()) throw ParseError("field \"nodes\" must be an array");

    AnnotationDocument doc;
    std::size_t position = 0;
    for (const json& item : *nodes_it) {
        if (!item.is_object())
            throw ParseError("node " + std::to_string(position) + ": must be an object");
        NodeRecord node;
        node.id = require_string(item, "id", "node", position);
        node.label = require_string(item, "label", "node", position);
        if (auto it = item.find("text"); it != item.end()) {
            if (!it->is_string())
                throw ParseError("node " + std::to_string(position) +
                                 ": field \"text\" must be a string");
            node.text = it->get<std::string>();
        }
        doc.nodes.push_back(std::move(node));
        ++position;
    }

    if (auto edges_it = root.find("edges"); edges_it != root.end()) {
        if (!edges_it->is_array()) throw ParseError("field \"edges\" must be an array");
        position = 0;
        for (const json& item : *edges_it) {
            if (!item.is_object())
                throw ParseError("edge " + std::to_string(position) + ": must be an object");
            EdgeRecord edge;
            edge.src = require_string(item, "src", "edge", position);
            edge.dst = require_string(item, "dst", "edge", position);
            edge.label = require_string(item, "label", "edge", position);
            doc.edges.push_back(std::move(edge));
            ++position;
        }
    }

    if (auto meta_it = root.find("meta"); meta_it != root.end()) {
        if (!meta_it->is_object()) throw ParseError("field \"meta\" must be an object");
        for (const auto& [key, value] : meta_it->items()) {
            if (!value.is_string())
                throw ParseError("meta entry \"" + key + "\" must be a string");
            doc.meta.emplace(key, value.get<std::string>());
        }
    }

    return doc;
}

std::string serialize_document(const AnnotationDocument& doc) {
    nlohmann::ordered_json root;
    root["nodes"] = nlohmann::ordered_json::array();
    for (const NodeRecord& node : doc.nodes) {
        nlohmann::ordered_json item;
        item["id"] = node.id;
        item["label"] = node.label;
        item["text"] = node.text;
        root["nodes"].push_back(std::move(item));
    }
    root["edges"] = nlohmann::ordered_json::array();
    for (const EdgeRecord& edge : doc.edges) {
        nlohmann::ordered_json item;
        item["src"] = edge.src;
        item["dst"] = edge.dst;
        item["label"] = edge.label;
        root["edges"].push_back(std::move(item));
    }
    root["meta"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : doc.meta) root["meta"][key] = value;
    return root.dump(2) + "\n";
}

} // namespace rf
