#include "doctest.h"

#include "domains/blocks_world.h"
#include "domains/ecus.h"
#include "graph/isomorphism.h"
#include "gts/problem_io.h"
#include "heuristics/abstraction.h"
#include "test_util.h"

#include <sstream>

using namespace gtplan;
using namespace gtplan::testing;

TEST_CASE("problem round-trip preserves structure and behavior") {
    for (const PlanningProblem &original :
         {gen_ecus({2, false}), gen_blocksworld({4, 0, 1})}) {
        std::stringstream buffer;
        write_problem(buffer, original);
        PlanningProblem parsed = parse_problem(buffer);

        CHECK(parsed.name == original.name);
        CHECK(parsed.alphabet == original.alphabet);
        REQUIRE(parsed.rules.size() == original.rules.size());
        CHECK(is_isomorphic(parsed.initial, original.initial));
        CHECK(is_isomorphic(parsed.target.lhs, original.target.lhs));
        CHECK(parsed.target.nacs.size() == original.target.nacs.size());
        for (size_t i = 0; i < parsed.rules.size(); ++i) {
            CHECK(parsed.rules[i].name == original.rules[i].name);
            CHECK(is_isomorphic(parsed.rules[i].lhs, original.rules[i].lhs));
            CHECK(is_isomorphic(parsed.rules[i].rhs, original.rules[i].rhs));
            CHECK(parsed.rules[i].node_rhs_index ==
                  original.rules[i].node_rhs_index);
            CHECK(parsed.rules[i].edge_rhs_index ==
                  original.rules[i].edge_rhs_index);
            CHECK(parsed.rules[i].nacs.size() == original.rules[i].nacs.size());
        }
    }
    // Behavioral check: the parsed golden instance keeps its golden value.
    std::stringstream buffer;
    write_problem(buffer, gen_ecus({2, false}));
    PlanningProblem parsed = parse_problem(buffer);
    HeuristicConfig cfg;
    CHECK(h_abs(parsed.initial, parsed, cfg, 1000) == 4);
}

TEST_CASE("parse errors carry line numbers") {
    std::stringstream bad("problem x\nalphabet A\ninit\nnode 1 B\nend\n");
    // Type B is not declared in the alphabet.
    CHECK_THROWS_AS(parse_problem(bad), ParseError);
    try {
        std::stringstream again("problem x\nalphabet A\ninit\nnode 1 B\nend\n");
        parse_problem(again);
    } catch (const ParseError &e) {
        CHECK(e.line == 4);
    }

    std::stringstream truncated("problem x\nalphabet A\ninit\nnode 1 A\n");
    CHECK_THROWS_AS(parse_problem(truncated), ParseError);
}

TEST_CASE("plan file round-trip") {
    Plan plan;
    plan.steps.push_back({"deployComponent", {2, 3}});
    plan.steps.push_back({"shutdownNode", {1}});
    std::stringstream buffer;
    write_plan(buffer, plan);
    Plan parsed = parse_plan(buffer);
    CHECK(parsed.steps == plan.steps);
}
