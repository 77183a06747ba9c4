#pragma once

#include <string>
#include <vector>

namespace pfh {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// the twelve release checks, in order; an exception inside one marks it
// failed and the remaining checks still run
std::vector<CriterionResult> run_acceptance();

}  // namespace pfh
