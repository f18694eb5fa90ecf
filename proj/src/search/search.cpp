#include "search.h"

#include "../gts/derivation.h"
#include "../heuristics/similarity.h"

#include <chrono>
#include <queue>
#include <stdexcept>

namespace gtplan {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Clock::time_point deadline_for(Clock::time_point start,
                               const SearchLimits &limits) {
    if (limits.time_seconds == std::numeric_limits<double>::infinity())
        return Clock::time_point::max();
    return start + std::chrono::duration_cast<Clock::duration>(
                       std::chrono::duration<double>(limits.time_seconds));
}

struct NodeInfo {
    int parent = -1;
    int depth = 0;
    int h = 0;
    PlanStep step; // transformation that produced this node
};

struct OpenEntry {
    long key1;
    long key2;
    long order;
    int id;

    bool operator>(const OpenEntry &o) const {
        if (key1 != o.key1)
            return key1 > o.key1;
        if (key2 != o.key2)
            return key2 > o.key2;
        return order > o.order;
    }
};

enum class Outcome { solved, improved, timeout, state_limit, open_exhausted };

/*
  Shared best-first core. Plain greedy best-first orders the open list by
  (h, depth, FIFO), A* by (depth + h, h, FIFO). With improve_bound set
  (enforced hill-climbing episodes) the run stops as soon as a generated
  state beats the bound. Goal test happens at generation time.
*/
class BestFirstEngine {
public:
    BestFirstEngine(const PlanningProblem &problem, Heuristic &heuristic,
                    SearchStats &stats, Clock::time_point deadline,
                    long max_states, bool use_astar,
                    std::optional<int> improve_bound)
        : problem(problem), heuristic(heuristic), stats(stats),
          deadline(deadline), max_states(max_states), use_astar(use_astar),
          improve_bound(improve_bound) {}

    StateRegistry registry;
    std::vector<NodeInfo> nodes;
    int result_id = -1; // goal or improved node

    Outcome run(const TypedGraph &root, bool count_root,
                std::optional<int> root_h) {
        heuristic.set_deadline(deadline == Clock::time_point::max()
                                   ? std::nullopt
                                   : std::optional(deadline));
        auto [root_id, fresh] = registry.insert(root);
        (void)fresh;
        nodes.resize(registry.size());
        if (count_root)
            ++stats.generated_states;
        if (pattern_has_match(problem.target, root)) {
            result_id = root_id;
            return Outcome::solved;
        }
        std::optional<int> root_value = root_h ? root_h : evaluate(root);
        if (!root_value)
            return Outcome::timeout;
        int h = *root_value;
        if (h == kInfiniteHeuristic)
            return Outcome::open_exhausted;
        nodes[root_id].h = h;
        push(root_id, h, 0);

        while (!open.empty()) {
            if (Clock::now() > deadline)
                return Outcome::timeout;
            int id = open.top().id;
            open.pop();
            ++stats.expanded_states;
            int depth = nodes[id].depth;
            // Expanded against a snapshot; the registry only grows.
            TypedGraph state = registry.state(id);
            for (const auto &[rule, match] :
                 applicable_transformations(problem.rules, state)) {
                TypedGraph succ = apply_rule(*rule, match, state);
                auto [succ_id, inserted] = registry.insert(succ);
                if (!inserted)
                    continue;
                nodes.resize(registry.size());
                nodes[succ_id] = {id, depth + 1, 0,
                                  {rule->name.str(), match.encode()}};
                ++stats.generated_states;
                if (pattern_has_match(problem.target, succ)) {
                    result_id = succ_id;
                    return Outcome::solved;
                }
                if (stats.generated_states >= max_states)
                    return Outcome::state_limit;
                std::optional<int> succ_value = evaluate(succ);
                if (!succ_value || Clock::now() > deadline)
                    return Outcome::timeout;
                int succ_h = *succ_value;
                if (succ_h == kInfiniteHeuristic)
                    continue; // dead end, pruned
                nodes[succ_id].h = succ_h;
                if (improve_bound && succ_h < *improve_bound) {
                    result_id = succ_id;
                    return Outcome::improved;
                }
                push(succ_id, succ_h, depth + 1);
            }
        }
        return Outcome::open_exhausted;
    }

    // Steps along the parent chain from the root to the given node.
    std::vector<PlanStep> path_steps(int id) const {
        std::vector<PlanStep> steps;
        for (int n = id; nodes[n].parent >= 0; n = nodes[n].parent)
            steps.push_back(nodes[n].step);
        std::reverse(steps.begin(), steps.end());
        return steps;
    }

private:
    const PlanningProblem &problem;
    Heuristic &heuristic;
    SearchStats &stats;
    Clock::time_point deadline;
    long max_states;
    bool use_astar;
    std::optional<int> improve_bound;
    long next_order = 0;
    std::priority_queue<OpenEntry, std::vector<OpenEntry>,
                        std::greater<OpenEntry>>
        open;

    // Returns nullopt when the deadline passed mid-evaluation.
    std::optional<int> evaluate(const TypedGraph &state) {
        Clock::time_point start = Clock::now();
        std::optional<int> h;
        try {
            h = heuristic.evaluate(state);
        } catch (const HeuristicTimeout &) {
        }
        stats.heuristic_seconds += seconds_since(start);
        ++stats.heuristic_calls;
        return h;
    }

    void push(int id, int h, int depth) {
        long key1 = use_astar ? static_cast<long>(depth) + h : h;
        long key2 = use_astar ? h : depth;
        open.push({key1, key2, next_order++, id});
    }
};

SearchResult best_first(const PlanningProblem &problem, Heuristic &heuristic,
                        const SearchLimits &limits, bool use_astar) {
    SearchResult result;
    Clock::time_point start = Clock::now();
    BestFirstEngine engine(problem, heuristic, result.stats,
                           deadline_for(start, limits), limits.max_states,
                           use_astar, std::nullopt);
    Outcome outcome = engine.run(problem.initial, true, std::nullopt);
    switch (outcome) {
    case Outcome::solved:
        result.status = SearchStatus::solved;
        result.plan = Plan{engine.path_steps(engine.result_id)};
        result.stats.plan_length = result.plan->length();
        break;
    case Outcome::timeout:
        result.status = SearchStatus::timeout;
        break;
    case Outcome::state_limit:
        result.status = SearchStatus::state_limit;
        break;
    case Outcome::open_exhausted:
    case Outcome::improved: // unreachable without a bound
        result.status = SearchStatus::exhausted;
        break;
    }
    result.stats.total_seconds = seconds_since(start);
    return result;
}

} // namespace

const char *search_status_name(SearchStatus status) {
    switch (status) {
    case SearchStatus::solved:
        return "solved";
    case SearchStatus::timeout:
        return "timeout";
    case SearchStatus::state_limit:
        return "state_limit";
    case SearchStatus::exhausted:
        return "exhausted";
    case SearchStatus::dead_end:
        return "dead_end";
    }
    return "unknown";
}

std::unique_ptr<Heuristic> make_heuristic(const std::string &name,
                                          const PlanningProblem &problem,
                                          const HeuristicConfig &cfg) {
    if (name == "abs")
        return std::make_unique<AbstractionHeuristic>(problem, cfg);
    if (name == "sim")
        return std::make_unique<SimilarityHeuristic>(problem.target);
    throw std::invalid_argument("unknown heuristic: " + name);
}

std::vector<std::pair<int, PlanStep>> expand_state(const TypedGraph &state,
                                                   const PlanningProblem &problem,
                                                   StateRegistry &registry) {
    std::vector<std::pair<int, PlanStep>> fresh;
    for (const auto &[rule, match] :
         applicable_transformations(problem.rules, state)) {
        TypedGraph succ = apply_rule(*rule, match, state);
        auto [id, inserted] = registry.insert(succ);
        if (inserted)
            fresh.emplace_back(id, PlanStep{rule->name.str(), match.encode()});
    }
    return fresh;
}

SearchResult greedy_best_first(const PlanningProblem &problem,
                               Heuristic &heuristic,
                               const SearchLimits &limits) {
    return best_first(problem, heuristic, limits, false);
}

SearchResult astar(const PlanningProblem &problem, Heuristic &heuristic,
                   const SearchLimits &limits) {
    return best_first(problem, heuristic, limits, true);
}

SearchResult enforced_hill_climbing(const PlanningProblem &problem,
                                    Heuristic &heuristic,
                                    const SearchLimits &limits) {
    SearchResult result;
    Clock::time_point start = Clock::now();
    Clock::time_point deadline = deadline_for(start, limits);

    TypedGraph current = problem.initial;
    ++result.stats.generated_states;
    Plan plan;

    if (pattern_has_match(problem.target, current)) {
        result.status = SearchStatus::solved;
        result.plan = std::move(plan);
        result.stats.plan_length = 0;
        result.stats.total_seconds = seconds_since(start);
        return result;
    }

    heuristic.set_deadline(deadline == Clock::time_point::max()
                               ? std::nullopt
                               : std::optional(deadline));
    Clock::time_point h_start = Clock::now();
    int h_current;
    try {
        h_current = heuristic.evaluate(current);
    } catch (const HeuristicTimeout &) {
        result.status = SearchStatus::timeout;
        result.stats.heuristic_seconds += seconds_since(h_start);
        ++result.stats.heuristic_calls;
        result.stats.total_seconds = seconds_since(start);
        return result;
    }
    result.stats.heuristic_seconds += seconds_since(h_start);
    ++result.stats.heuristic_calls;

    result.status = SearchStatus::dead_end;
    while (h_current != kInfiniteHeuristic) {
        // Fresh closed list per episode; only the statistics carry over.
        BestFirstEngine episode(problem, heuristic, result.stats, deadline,
                                limits.max_states, false, h_current);
        Outcome outcome = episode.run(current, false, h_current);
        if (outcome == Outcome::solved || outcome == Outcome::improved) {
            std::vector<PlanStep> steps = episode.path_steps(episode.result_id);
            plan.steps.insert(plan.steps.end(), steps.begin(), steps.end());
            current = episode.registry.state(episode.result_id);
            if (outcome == Outcome::solved) {
                result.status = SearchStatus::solved;
                result.plan = std::move(plan);
                result.stats.plan_length = result.plan->length();
                break;
            }
            h_current = episode.nodes[episode.result_id].h;
            continue;
        }
        if (outcome == Outcome::timeout)
            result.status = SearchStatus::timeout;
        else if (outcome == Outcome::state_limit)
            result.status = SearchStatus::state_limit;
        else
            result.status = SearchStatus::dead_end;
        break;
    }
    result.stats.total_seconds = seconds_since(start);
    return result;
}

SearchResult run_search(const std::string &algorithm,
                        const PlanningProblem &problem, Heuristic &heuristic,
                        const SearchLimits &limits) {
    if (algorithm == "gbf")
        return greedy_best_first(problem, heuristic, limits);
    if (algorithm == "ehc")
        return enforced_hill_climbing(problem, heuristic, limits);
    if (algorithm == "astar")
        return astar(problem, heuristic, limits);
    throw std::invalid_argument("unknown algorithm: " + algorithm);
}

} // namespace gtplan
