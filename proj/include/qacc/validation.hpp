#pragma once

#include <string>
#include <vector>

namespace qacc {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Full invariant and oracle suite, one result per check, in a fixed order.
// sim_path locates the command line binary used by the figure-output check;
// pass an empty string to report that check as failed for lack of a binary.
std::vector<CheckResult> run_validation_suite(const std::string& sim_path);

}  // namespace qacc
