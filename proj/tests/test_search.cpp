#include "doctest.h"

#include "domains/blocks_world.h"
#include "domains/ecus.h"
#include "gts/derivation.h"
#include "gts/plan.h"
#include "oracles.h"
#include "search/search.h"
#include "test_util.h"

using namespace gtplan;
using namespace gtplan::testing;

namespace {

int bfs_optimal_length(const PlanningProblem &p, size_t max_states) {
    oracles::StateSpace space = oracles::exhaustive_state_space(p, max_states);
    REQUIRE(space.complete);
    int best = -1;
    for (size_t i = 0; i < space.states.size(); ++i)
        if (space.is_goal[i] && (best < 0 || space.distance[i] < best))
            best = space.distance[i];
    REQUIRE(best >= 0);
    return best;
}

} // namespace

TEST_CASE("expansion matches the deduplicated brute-force successor count") {
    PlanningProblem p = gen_ecus({2, false});
    StateRegistry registry;
    registry.insert(p.initial);
    auto successors = expand_state(p.initial, p, registry);

    // Oracle: apply every applicable pair, deduplicate by isomorphism.
    std::vector<TypedGraph> distinct;
    for (const auto &[rule, m] : applicable_transformations(p.rules, p.initial)) {
        TypedGraph succ = apply_rule(*rule, m, p.initial);
        bool known = false;
        for (const TypedGraph &seen : distinct)
            known |= oracles::brute_force_isomorphic(seen, succ);
        if (!known)
            distinct.push_back(std::move(succ));
    }
    CHECK(successors.size() == distinct.size());

    // Re-expanding yields nothing new.
    CHECK(expand_state(p.initial, p, registry).empty());
}

TEST_CASE("no applicable rules means no successors") {
    GraphBuilder b;
    b.add_node(sym("A"));
    PlanningProblem p;
    p.initial = b.build();
    p.target = Pattern{p.initial, {}};
    StateRegistry registry;
    registry.insert(p.initial);
    CHECK(expand_state(p.initial, p, registry).empty());
}

TEST_CASE("gbf with h_abs solves the 2-ECU instance optimally") {
    PlanningProblem p = gen_ecus({2, false});
    auto h = make_heuristic("abs", p);
    SearchResult result = greedy_best_first(p, *h);
    REQUIRE(result.solved());
    REQUIRE(result.plan.has_value());
    CHECK(validate_plan(p, *result.plan).valid);
    CHECK(result.plan->length() == 4);
    CHECK(bfs_optimal_length(p, 500) == 4);
}

TEST_CASE("goal initial state returns an empty plan with zero expansions") {
    PlanningProblem p = gen_ecus({2, false});
    p.target = Pattern{}; // matches anything
    for (const char *algorithm : {"gbf", "ehc", "astar"}) {
        auto h = make_heuristic("abs", p);
        SearchResult result = run_search(algorithm, p, *h);
        REQUIRE(result.solved());
        CHECK(result.plan->length() == 0);
        CHECK(result.stats.expanded_states == 0);
    }
}

TEST_CASE("all algorithm/heuristic combinations return valid plans") {
    std::vector<PlanningProblem> problems;
    problems.push_back(gen_ecus({2, false}));
    problems.push_back(gen_ecus({3, true}));
    problems.push_back(gen_blocksworld({4, 0, 1}));
    problems.push_back(gen_blocksworld({5, 2, 3}));
    for (const PlanningProblem &p : problems) {
        for (const char *algorithm : {"gbf", "ehc", "astar"}) {
            for (const char *heuristic : {"abs", "sim"}) {
                auto h = make_heuristic(heuristic, p);
                SearchResult result =
                    run_search(algorithm, p, *h, {60.0, 10000000});
                REQUIRE(result.solved());
                CHECK(validate_plan(p, *result.plan).valid);
            }
        }
    }
}

TEST_CASE("plan length is never below the BFS optimum") {
    PlanningProblem p = gen_blocksworld({4, 1, 2});
    int optimal = bfs_optimal_length(p, 400);
    for (const char *heuristic : {"abs", "sim"}) {
        auto h = make_heuristic(heuristic, p);
        SearchResult result = greedy_best_first(p, *h);
        REQUIRE(result.solved());
        CHECK(validate_plan(p, *result.plan).valid);
        CHECK(result.plan->length() >= static_cast<size_t>(optimal));
    }
}

TEST_CASE("search statistics are deterministic across runs") {
    PlanningProblem p = gen_ecus({3, false});
    for (const char *algorithm : {"gbf", "ehc", "astar"}) {
        for (const char *heuristic : {"abs", "sim"}) {
            auto h1 = make_heuristic(heuristic, p);
            auto h2 = make_heuristic(heuristic, p);
            SearchResult a = run_search(algorithm, p, *h1);
            SearchResult b = run_search(algorithm, p, *h2);
            CHECK(a.stats.generated_states == b.stats.generated_states);
            CHECK(a.stats.expanded_states == b.stats.expanded_states);
            CHECK(a.stats.plan_length == b.stats.plan_length);
        }
    }
}

TEST_CASE("unsolvable problems fail fast with exhausted or dead end") {
    PlanningProblem p = gen_ecus({2, false});
    GraphBuilder impossible;
    impossible.add_node(sym("Martian"));
    p.target = Pattern{impossible.build(), {}};
    for (const char *algorithm : {"gbf", "ehc", "astar"}) {
        auto h = make_heuristic("abs", p);
        SearchResult result = run_search(algorithm, p, *h, {30.0, 1000000});
        CHECK_FALSE(result.solved());
        CHECK((result.status == SearchStatus::exhausted ||
               result.status == SearchStatus::dead_end));
    }
}

TEST_CASE("state limit and expanded/generated accounting") {
    PlanningProblem p = gen_ecus({4, false});
    auto h = make_heuristic("sim", p);
    SearchResult result = greedy_best_first(p, *h, {60.0, 50});
    CHECK(result.status == SearchStatus::state_limit);
    CHECK(result.stats.expanded_states <= result.stats.generated_states);
}
