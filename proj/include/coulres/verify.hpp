// Acceptance checks, grouped into suites for the verify command.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coulres {

enum class Relation { at_most, at_least, within };

struct Check {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;       // bound (at_most / at_least) or half-width (within)
    double target = 0.0;          // centre for within
    Relation relation = Relation::at_most;
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0.0;
    bool pass() const;
    const Check* first_failure() const;
};

struct VerifyOptions {
    std::uint64_t seed = 20240917;
};

CriterionResult run_criterion(int id, const VerifyOptions& opt = {});

const std::vector<std::string>& suite_names();
// criteria covered by a suite; DomainError for unknown names
std::vector<int> suite_criteria(const std::string& suite);
std::string criterion_title(int id);

}  // namespace coulres
