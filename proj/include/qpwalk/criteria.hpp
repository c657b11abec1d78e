#pragma once

#include <string>
#include <vector>

namespace qpwalk {

/// One verification criterion of the validation suite. The same checks back
/// the `validate` subcommand and the acceptance test binary.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

inline constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id);

/// suite: "all", "analytic" {6,7,8}, "oracle" {1,2,3,4,5,9,10}, "mc" {11}
std::vector<int> suite_criteria(const std::string& suite);

}  // namespace qpwalk
