#ifndef GTS_PLANNING_PROBLEM_H
#define GTS_PLANNING_PROBLEM_H

#include "rule.h"

#include <string>
#include <vector>

namespace gtplan {

/*
  A planning problem over a graph transformation system: rules, an initial
  graph, and a target graph pattern. Rule names are unique and all type
  labels are drawn from one declared alphabet.
*/
struct PlanningProblem {
    std::string name;
    std::vector<Symbol> alphabet;
    std::vector<Rule> rules;
    TypedGraph initial;
    Pattern target;

    const Rule *rule_by_name(Symbol name) const {
        for (const Rule &r : rules)
            if (r.name == name)
                return &r;
        return nullptr;
    }
};

} // namespace gtplan

#endif
