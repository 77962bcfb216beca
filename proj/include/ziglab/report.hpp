#pragma once

// Verification report shared by every verify_* routine.  Failures are data,
// not exceptions: a verifier always runs to completion and reports what broke.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ziglab {

struct Report {
    std::string target;
    unsigned long long checked = 0;
    std::vector<std::string> failures;
    // Extra per-target facts (counts, bounds), in fixed emission order.
    std::vector<std::pair<std::string, std::string>> extras;
    long long elapsed_ms = 0;

    bool ok() const { return failures.empty(); }

    void add_extra(std::string key, std::string value) {
        extras.emplace_back(std::move(key), std::move(value));
    }

    // include_timing is off by default so repeated runs are byte-identical.
    std::string text(bool include_timing = false) const;
    nlohmann::ordered_json json(bool include_timing = false) const;
};

} // namespace ziglab
