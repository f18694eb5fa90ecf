#ifndef HEURISTICS_ABSTRACTION_H
#define HEURISTICS_ABSTRACTION_H

#include "abstract_sequence.h"
#include "heuristic.h"

namespace gtplan {

struct HeuristicConfig {
    // Cap on abstract_step iterations while bootstrapping the initial
    // state's value (and fallback when that value is infinite).
    int max_abstract_depth = 1000;
    // Every other state is capped at this factor times the bootstrap value.
    double per_state_cap_factor = 2.0;
    // Widens LHS label inheritance from created elements to all elements.
    bool lhs_inherit_all_labels = false;
};

struct AbstractionResult {
    int value = kInfiniteHeuristic;
    int depth = 0; // abstract steps until the first relaxed target match
};

/*
  Abstraction heuristic: builds the relaxed abstract sequence from state
  until the target matches in the relaxed sense, then counts the distinct
  rule-application labels on the cheapest goal match. Infinite if the cap
  is hit or the sequence reaches a fixpoint without a target match.
*/
AbstractionResult h_abs_details(const TypedGraph &state,
                                const PlanningProblem &problem,
                                const HeuristicConfig &cfg, int cap,
                                const PollHook &poll = {});

int h_abs(const TypedGraph &state, const PlanningProblem &problem,
          const HeuristicConfig &cfg, int cap);

class AbstractionHeuristic : public Heuristic {
public:
    AbstractionHeuristic(const PlanningProblem &problem,
                         const HeuristicConfig &cfg = {});

    int evaluate(const TypedGraph &state) override;
    void set_deadline(
        std::optional<std::chrono::steady_clock::time_point> d) override {
        deadline_ = d;
    }

    // Bootstrap cap: per_state_cap_factor times the initial state's value,
    // computed lazily so a search deadline also covers the bootstrap.
    int initial_value();
    int cap();

private:
    const PlanningProblem &problem;
    HeuristicConfig cfg;
    bool bootstrapped_ = false;
    int initial_value_ = kInfiniteHeuristic;
    int cap_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;

    PollHook deadline_poll() const;
    void ensure_bootstrap(const PollHook &poll);
};

} // namespace gtplan

#endif
