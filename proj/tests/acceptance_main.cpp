// Runs the full self-check suite and prints one verdict line per criterion.
// argv[1] must point at the command line binary so the figure checks can run
// it end to end.

#include "qacc/validation.hpp"

#include <cstdio>
#include <string>

int main(int argc, char** argv) {
    const std::string sim_path = argc > 1 ? argv[1] : "";
    const std::vector<qacc::CheckResult> results = qacc::run_validation_suite(sim_path);

    std::size_t passed = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const qacc::CheckResult& r = results[i];
        std::printf("[%s] %2zu. %s (%s)\n", r.passed ? "PASS" : "FAIL", i + 1, r.name.c_str(),
                    r.detail.c_str());
        if (r.passed) ++passed;
    }
    std::printf("%zu/%zu criteria satisfied\n", passed, results.size());
    return passed == results.size() ? 0 : 1;
}
