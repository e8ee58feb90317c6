#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fbmlab {

enum class Suite { Quick, Full };
std::string_view to_string(Suite s);
Suite parse_suite(std::string_view s);

struct CriterionResult {
    int id = 0;
    std::string name;
    double value = 0.0;      // headline statistic
    double threshold = 0.0;  // bound it is compared with
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    Suite suite = Suite::Quick;
    std::uint64_t seed = 0;
    std::vector<CriterionResult> criteria;

    [[nodiscard]] bool all_pass() const;
};

// The ten acceptance criteria. Quick lowers Monte Carlo sizes; both are deterministic in seed.
// Criterion 10 reruns criteria 1-9 at quick scale and compares every reported field bitwise.
SuiteReport run_suite(Suite suite, std::uint64_t seed);

// A single criterion, 1 <= id <= 10.
CriterionResult run_criterion(int id, Suite suite, std::uint64_t seed);

} // namespace fbmlab
