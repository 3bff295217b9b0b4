// Named pass/fail checks, printed as "key: value" lines by the CLI.
#pragma once

#include <string>
#include <vector>

namespace eislat {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;

    void add(std::string name, bool ok, std::string detail = "") {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
    void append(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

}  // namespace eislat
