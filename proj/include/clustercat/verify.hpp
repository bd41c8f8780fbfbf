#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace clustercat {

struct VerifyOptions {
    /// Negates the exchange matrix inside every type A context (fault injection).
    bool flip_b_sign = false;
};

struct CheckResult {
    int criterion = 0;
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyReport {
    std::string suite;
    VerifyOptions options;
    std::vector<CheckResult> checks;

    bool passed() const;
    nlohmann::json to_json() const;
};

/// "fpoly", "grass", "char", "algebra", "all".
const std::vector<std::string>& suite_names();

/// Short description of acceptance criterion k (1..12).
std::string criterion_title(int k);

/// Runs the named suite; every check is recorded, failures included.
/// Throws InvalidInput for an unknown suite name.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& options = {});

}  // namespace clustercat
