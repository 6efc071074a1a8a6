#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rq {

struct CriterionResult {
    int id = 0;
    std::string name;
    std::string anchor;  // the statement being checked
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double time_limit = 0;  // 0: no bound
};

int acceptance_count();
// Runs one criterion (1-based). Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, uint64_t seed = 0);
std::vector<CriterionResult> run_acceptance(uint64_t seed = 0,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace rq
