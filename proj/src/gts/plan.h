#ifndef GTS_PLAN_H
#define GTS_PLAN_H

#include "planning_problem.h"
#include "../matcher/morphism.h"

#include <optional>
#include <string>
#include <vector>

namespace gtplan {

struct PlanStep {
    std::string rule_name;
    // Host element ids: LHS node images in index order, then LHS edge images.
    std::vector<ElementId> match_encoding;

    bool operator==(const PlanStep &other) const = default;
};

struct Plan {
    std::vector<PlanStep> steps;

    size_t length() const { return steps.size(); }
};

struct PlanValidation {
    bool valid = false;
    // Index of the first failing step, or steps.size() if every step applied
    // but the target was not reached.
    size_t failed_step = 0;
    std::string message;
};

// Replays the plan from the initial graph, checking each match and the final
// target condition.
PlanValidation validate_plan(const PlanningProblem &problem, const Plan &plan);

Morphism decode_match(const Rule &rule, const std::vector<ElementId> &encoding);

} // namespace gtplan

#endif
