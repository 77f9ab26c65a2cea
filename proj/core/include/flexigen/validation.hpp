#pragma once

#include <string>
#include <vector>

namespace flexigen {

enum class Severity { warning, fatal };

// One validation finding. Findings are data, not exceptions: collecting them
// lets a caller report everything wrong with an input at once.
struct Finding {
    Severity severity = Severity::warning;
    std::string code;     // short machine-readable tag, e.g. "table_sum"
    std::string message;  // human-readable detail
    long row = -1;        // row number for dataset findings, -1 if n/a

    bool operator==(const Finding&) const = default;
};

struct ValidationReport {
    std::vector<Finding> findings;

    bool has_fatal() const {
        for (const auto& f : findings) {
            if (f.severity == Severity::fatal) return true;
        }
        return false;
    }
    std::size_t warning_count() const {
        std::size_t n = 0;
        for (const auto& f : findings) {
            if (f.severity == Severity::warning) ++n;
        }
        return n;
    }
    std::size_t fatal_count() const { return findings.size() - warning_count(); }
    bool clean() const { return findings.empty(); }

    void add(Severity sev, std::string code, std::string message, long row = -1) {
        findings.push_back(Finding{sev, std::move(code), std::move(message), row});
    }

    bool operator==(const ValidationReport&) const = default;
};

}  // namespace flexigen
