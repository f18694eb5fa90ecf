#include "plan.h"

#include "derivation.h"

#include <stdexcept>

namespace gtplan {

Morphism decode_match(const Rule &rule, const std::vector<ElementId> &encoding) {
    size_t n = rule.lhs.num_nodes();
    size_t e = rule.lhs.num_edges();
    if (encoding.size() != n + e)
        throw std::invalid_argument(
            "match encoding has wrong length for rule " + rule.name.str());
    Morphism m;
    m.node_image.assign(encoding.begin(), encoding.begin() + n);
    m.edge_image.assign(encoding.begin() + n, encoding.end());
    return m;
}

PlanValidation validate_plan(const PlanningProblem &problem, const Plan &plan) {
    TypedGraph current = problem.initial;
    for (size_t i = 0; i < plan.steps.size(); ++i) {
        const PlanStep &step = plan.steps[i];
        const Rule *rule = problem.rule_by_name(Symbol(step.rule_name));
        if (!rule)
            return {false, i, "unknown rule: " + step.rule_name};
        Morphism m;
        try {
            m = decode_match(*rule, step.match_encoding);
        } catch (const std::invalid_argument &err) {
            return {false, i, err.what()};
        }
        if (!is_valid_match(*rule, m, current))
            return {false, i,
                    "match of rule " + step.rule_name + " is not valid"};
        current = apply_rule(*rule, m, current);
    }
    if (!pattern_has_match(problem.target, current))
        return {false, plan.steps.size(),
                "final graph does not satisfy the target"};
    return {true, plan.steps.size(), ""};
}

} // namespace gtplan
