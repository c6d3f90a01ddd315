#pragma once

// Fixture loading helpers for tests linked against the core library.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "document.hpp"
#include "graph.hpp"

namespace rf::test {

inline std::string fixture_path(const std::string& name) {
    return std::string(RF_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline AnnotationDocument load_fixture(const std::string& name) {
    return load_document(read_file(fixture_path(name)));
}

// Builds a fixture expected to be constructible under the given strictness.
inline FlowGraph build_fixture(const std::string& name,
                               Strictness strictness = Strictness::Lenient) {
    BuildResult result = build_graph(load_fixture(name), strictness);
    if (!result.graph.has_value())
        throw std::runtime_error("fixture " + name + " did not produce a graph");
    return std::move(*result.graph);
}

} // namespace rf::test
