#pragma once

#include <string>
#include <utility>
#include <vector>

namespace parastat {

struct CheckResult {
    CheckResult() = default;
    CheckResult(std::string check_name, bool ok = true, std::size_t count = 0)
        : name(std::move(check_name)), passed(ok), instances(count) {}

    std::string name;
    bool passed = true;
    /// Number of individual instances examined.
    std::size_t instances = 0;
    /// First failing instance and its nonzero residual, or a short summary.
    std::string witness;
    /// Instances skipped because they exceeded the truncation degree.
    std::size_t overflows = 0;
    /// Instances that needed a higher truncation degree to evaluate.
    std::size_t escalated = 0;

    void fail(std::string why) {
        if (passed)
            witness = std::move(why);
        passed = false;
    }
};

struct Report {
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }
    void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

} // namespace parastat
