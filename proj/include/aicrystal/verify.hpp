#pragma once

#include <string>
#include <vector>

namespace aicrystal {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    int max_n = 4;
    int max_size = 4;
    int max_len = 4;
};

// Suites: axioms, gl, counts, kmatrix, rsai, tensor, branch, singular, all.
std::vector<std::string> verify_suite_names();
std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyOptions& opts);

}  // namespace aicrystal
