// Runs every verification check and prints one line per acceptance criterion.
#include "clustercat/verify.hpp"

#include <chrono>
#include <cstdio>
#include <map>

int main() {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const clustercat::VerifyReport report = clustercat::run_verify("all");
    const double total = std::chrono::duration<double>(clock::now() - start).count();

    struct Row {
        bool passed = true;
        double seconds = 0;
        std::string failure;
    };
    std::map<int, Row> rows;
    for (const auto& c : report.checks) {
        Row& row = rows[c.criterion];
        row.seconds += c.seconds;
        if (!c.passed && row.passed) {
            row.passed = false;
            row.failure = c.name + ": " + c.detail;
        }
    }

    bool ok = total < 60.0;
    for (int k = 1; k <= 12; ++k) {
        auto it = rows.find(k);
        const bool passed = it != rows.end() && it->second.passed;
        ok = ok && passed;
        std::printf("criterion %2d %s  %s (%.2f s)\n", k, passed ? "PASS" : "FAIL", clustercat::criterion_title(k).c_str(),
                    it == rows.end() ? 0.0 : it->second.seconds);
        if (it != rows.end() && !passed) std::printf("    %s\n", it->second.failure.c_str());
    }
    std::printf("total %.2f s (limit 60 s)\n", total);
    return ok ? 0 : 1;
}
