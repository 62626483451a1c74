#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace shiftconv {

struct CheckResult {
    std::string name;
    std::string anchor;  // one-line statement of the identity being checked
    bool passed = false;
    double metric = 0.0;     // worst error or failure count, see detail
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyOptions {
    // nullopt runs every check; an empty list runs none.
    std::optional<std::vector<std::string>> checks;
    // Flips the sign of the unfolding right-hand side.
    bool inject_bug = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

const std::vector<std::string>& verify_check_names();

// Throws config_error on an unknown check name.
VerifyReport run_verify(const VerifyOptions& options);

// schema_version 1; keys in fixed order, deterministic for a fixed report.
void write_verify_json(std::ostream& out, const VerifyReport& report);

}  // namespace shiftconv
