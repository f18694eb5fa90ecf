#include "abstraction.h"

#include <cmath>

namespace gtplan {

AbstractionResult h_abs_details(const TypedGraph &state,
                                const PlanningProblem &problem,
                                const HeuristicConfig &cfg, int cap,
                                const PollHook &poll) {
    AbstractState current(state);
    if (std::optional<int> value =
            relaxed_goal_value(current, problem.target, poll))
        return {*value, 0};
    for (int iteration = 1; iteration <= cap; ++iteration) {
        AbstractState next = abstract_step(current, problem.rules, iteration,
                                           cfg.lhs_inherit_all_labels, poll);
        // Fixpoint: nothing new fired, so nothing will ever change.
        if (next.applied.size() == current.applied.size())
            return {kInfiniteHeuristic, iteration};
        current = std::move(next);
        if (std::optional<int> value =
                relaxed_goal_value(current, problem.target, poll))
            return {*value, iteration};
    }
    return {kInfiniteHeuristic, cap};
}

int h_abs(const TypedGraph &state, const PlanningProblem &problem,
          const HeuristicConfig &cfg, int cap) {
    return h_abs_details(state, problem, cfg, cap).value;
}

AbstractionHeuristic::AbstractionHeuristic(const PlanningProblem &problem,
                                           const HeuristicConfig &cfg)
    : problem(problem), cfg(cfg) {}

PollHook AbstractionHeuristic::deadline_poll() const {
    if (!deadline_)
        return {};
    // Checking the clock on every candidate probe would be wasteful;
    // sample it every few thousand polls.
    auto deadline = *deadline_;
    int countdown = 0;
    return [deadline, countdown]() mutable {
        if (--countdown > 0)
            return;
        countdown = 4096;
        if (std::chrono::steady_clock::now() > deadline)
            throw HeuristicTimeout{};
    };
}

void AbstractionHeuristic::ensure_bootstrap(const PollHook &poll) {
    if (bootstrapped_)
        return;
    initial_value_ =
        h_abs_details(problem.initial, problem, cfg, cfg.max_abstract_depth,
                      poll)
            .value;
    if (initial_value_ == kInfiniteHeuristic)
        cap_ = cfg.max_abstract_depth;
    else
        cap_ = static_cast<int>(
            std::ceil(cfg.per_state_cap_factor * initial_value_));
    bootstrapped_ = true;
}

int AbstractionHeuristic::initial_value() {
    ensure_bootstrap(deadline_poll());
    return initial_value_;
}

int AbstractionHeuristic::cap() {
    ensure_bootstrap(deadline_poll());
    return cap_;
}

int AbstractionHeuristic::evaluate(const TypedGraph &state) {
    PollHook poll = deadline_poll();
    ensure_bootstrap(poll);
    return h_abs_details(state, problem, cfg, cap_, poll).value;
}

} // namespace gtplan
