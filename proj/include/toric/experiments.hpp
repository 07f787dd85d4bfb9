#pragma once

#include <string>
#include <vector>

#include "toric/report.hpp"

namespace toric {

// One checked statement inside an experiment. `provenance` names where the
// expected value comes from: a closed-form function from the families module
// or the structural relation under test. `status` is "pass", "fail", or
// "skipped (budget)".
struct Assertion {
    std::string label;
    std::string provenance;
    std::string expected;
    std::string computed;  // "-" when skipped
    std::string status;
};

struct ExperimentVerdict {
    std::string id;
    std::string title;
    std::vector<Assertion> assertions;

    bool passed() const;  // no failed assertions (skips do not fail)
};

// All experiment ids, in canonical run order.
const std::vector<std::string>& experiment_ids();

// Runs one experiment's instances and compares the computed values against
// the closed forms. An unknown id raises an error listing the known ids.
// Instances whose declared nominal cost exceeds the budget (default 300
// seconds, env TORIC_BUDGET_SECS overrides) come back "skipped (budget)".
// The nominal costs are fixed declarations, never measurements, so the
// verdicts do not depend on machine speed or the thread count.
ExperimentVerdict reproduce(const std::string& id);

// Every experiment, assembled in id order. Experiments are independent and
// run concurrently under the process-wide thread count.
std::vector<ExperimentVerdict> reproduce_all();

std::string emit(const std::vector<ExperimentVerdict>& verdicts, Format format);

}  // namespace toric
