#pragma once

#include <string>
#include <vector>

namespace bpa {

struct CheckResult {
    std::string name;
    std::string range;
    bool pass = true;
    std::string detail; // first offending cells, empty when passing
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void merge(VerifyReport other) {
        for (auto& c : other.checks) checks.push_back(std::move(c));
    }
};

} // namespace bpa
