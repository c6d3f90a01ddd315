#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rf {

enum class Severity : std::uint8_t { Error, Warning };

inline std::string_view to_string(Severity severity) {
    return severity == Severity::Error ? "error" : "warning";
}

// One validation finding. pos_a/pos_b hold the document positions of the
// entities involved (node ordinal, or src/dst ordinals of an edge; -1 when
// the entity has no position, e.g. an undefined endpoint) and only serve to
// make report ordering deterministic.
struct Violation {
    std::string rule_id;
    Severity severity = Severity::Error;
    std::string message;
    std::vector<std::string> ids;
    std::int64_t pos_a = -1;
    std::int64_t pos_b = -1;
};

struct ValidationReport {
    std::vector<Violation> violations;

    std::size_t error_count() const {
        std::size_t n = 0;
        for (const auto& v : violations)
            if (v.severity == Severity::Error) ++n;
        return n;
    }

    std::size_t warning_count() const { return violations.size() - error_count(); }

    // True when the report blocks nothing: no error-severity findings.
    bool ok() const { return error_count() == 0; }

    void add(std::string rule_id, Severity severity, std::string message,
             std::vector<std::string> ids, std::int64_t pos_a = -1, std::int64_t pos_b = -1) {
        violations.push_back({std::move(rule_id), severity, std::move(message), std::move(ids),
                              pos_a, pos_b});
    }

    bool has_rule(std::string_view rule_id) const {
        for (const auto& v : violations)
            if (v.rule_id == rule_id) return true;
        return false;
    }

    // Same document always yields byte-identical report ordering.
    void sort_canonical() {
        std::stable_sort(violations.begin(), violations.end(),
                         [](const Violation& a, const Violation& b) {
                             if (a.rule_id != b.rule_id) return a.rule_id < b.rule_id;
                             if (a.pos_a != b.pos_a) return a.pos_a < b.pos_a;
                             if (a.pos_b != b.pos_b) return a.pos_b < b.pos_b;
                             return a.message < b.message;
                         });
    }

    void append(ValidationReport other) {
        for (auto& v : other.violations) violations.push_back(std::move(v));
    }
};

} // namespace rf
