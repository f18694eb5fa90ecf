#ifndef SEARCH_SEARCH_H
#define SEARCH_SEARCH_H

#include "state_registry.h"
#include "../gts/plan.h"
#include "../heuristics/abstraction.h"

#include <limits>
#include <memory>
#include <optional>
#include <string>

namespace gtplan {

struct SearchLimits {
    double time_seconds = std::numeric_limits<double>::infinity();
    long max_states = std::numeric_limits<long>::max();
};

enum class SearchStatus { solved, timeout, state_limit, exhausted, dead_end };

const char *search_status_name(SearchStatus status);

struct SearchStats {
    long generated_states = 0;
    long expanded_states = 0;
    long heuristic_calls = 0;
    double heuristic_seconds = 0.0;
    double total_seconds = 0.0;
    std::optional<size_t> plan_length;
};

struct SearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<Plan> plan;
    SearchStats stats;

    bool solved() const { return status == SearchStatus::solved; }
};

// "abs" or "sim"; throws std::invalid_argument on anything else.
std::unique_ptr<Heuristic> make_heuristic(const std::string &name,
                                          const PlanningProblem &problem,
                                          const HeuristicConfig &cfg = {});

/*
  Applies every applicable transformation to the given state and registers
  the successors; already-registered (isomorphic) successors are dropped.
  Returns the fresh states with their producing steps, in deterministic
  order.
*/
std::vector<std::pair<int, PlanStep>> expand_state(const TypedGraph &state,
                                                   const PlanningProblem &problem,
                                                   StateRegistry &registry);

// Expands the open-list node with minimal h; ties broken by lower depth,
// then insertion order. Goal test at generation time.
SearchResult greedy_best_first(const PlanningProblem &problem,
                               Heuristic &heuristic,
                               const SearchLimits &limits = {});

// f = depth + h, ties by lower h, then insertion order. No optimality
// claims: the heuristics are inadmissible.
SearchResult astar(const PlanningProblem &problem, Heuristic &heuristic,
                   const SearchLimits &limits = {});

/*
  Modified enforced hill-climbing: each episode runs greedy best-first from
  the current state until some generated state improves on its h value,
  then commits the path and restarts from there. Episodes use their own
  closed lists; a dead end (episode exhausted without improvement) fails
  without restarts.
*/
SearchResult enforced_hill_climbing(const PlanningProblem &problem,
                                    Heuristic &heuristic,
                                    const SearchLimits &limits = {});

// Dispatch by algorithm name: "gbf", "ehc" or "astar".
SearchResult run_search(const std::string &algorithm,
                        const PlanningProblem &problem, Heuristic &heuristic,
                        const SearchLimits &limits = {});

} // namespace gtplan

#endif
