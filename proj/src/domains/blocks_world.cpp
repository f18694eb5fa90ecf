#include "blocks_world.h"

#include <random>
#include <stdexcept>
#include <string>

namespace gtplan {

namespace {

const Symbol kBlock("Block");
const Symbol kTable("Table");
const Symbol kArm("Arm");
const Symbol kOn("on");
const Symbol kHolds("holds");

Symbol block_name(int index) {
    return Symbol("b" + std::to_string(index + 1));
}

// NAC: some block sits on the block at the given id.
Nac covered_nac(const TypedGraph &lhs, ElementId block_id) {
    GraphBuilder builder(lhs);
    ElementId cover = builder.add_node(kBlock);
    builder.add_edge(cover, kOn, block_id);
    Nac nac;
    nac.graph = builder.build();
    for (int i = 0; i < lhs.num_nodes(); ++i)
        nac.lhs_node_to_nac.push_back(nac.graph.node_index(lhs.node(i).id));
    for (int i = 0; i < lhs.num_edges(); ++i)
        nac.lhs_edge_to_nac.push_back(nac.graph.edge_index(lhs.edge(i).id));
    return nac;
}

// NAC: the arm at the given id already holds some block.
Nac busy_arm_nac(const TypedGraph &lhs, ElementId arm_id) {
    GraphBuilder builder(lhs);
    ElementId held = builder.add_node(kBlock);
    builder.add_edge(arm_id, kHolds, held);
    Nac nac;
    nac.graph = builder.build();
    for (int i = 0; i < lhs.num_nodes(); ++i)
        nac.lhs_node_to_nac.push_back(nac.graph.node_index(lhs.node(i).id));
    for (int i = 0; i < lhs.num_edges(); ++i)
        nac.lhs_edge_to_nac.push_back(nac.graph.edge_index(lhs.edge(i).id));
    return nac;
}

Rule make_pick_up_from_table() {
    Rule rule;
    rule.name = Symbol("pickUpFromTable");

    GraphBuilder lhs;
    lhs.add_node_with_id(1, kArm);
    lhs.add_node_with_id(2, kBlock);
    lhs.add_node_with_id(3, kTable);
    lhs.add_edge_with_id(4, 2, kOn, 3);
    rule.lhs = lhs.build();

    GraphBuilder rhs;
    rhs.add_node_with_id(1, kArm);
    rhs.add_node_with_id(2, kBlock);
    rhs.add_node_with_id(3, kTable);
    rhs.add_edge_with_id(5, 1, kHolds, 2);
    rule.rhs = rhs.build();

    rule.node_rhs_index = {0, 1, 2};
    rule.edge_rhs_index = {-1};
    rule.nacs = {covered_nac(rule.lhs, 2), busy_arm_nac(rule.lhs, 1)};
    return rule;
}

Rule make_pick_up_from_block() {
    Rule rule;
    rule.name = Symbol("pickUpFromBlock");

    GraphBuilder lhs;
    lhs.add_node_with_id(1, kArm);
    lhs.add_node_with_id(2, kBlock);
    lhs.add_node_with_id(3, kBlock);
    lhs.add_edge_with_id(4, 2, kOn, 3);
    rule.lhs = lhs.build();

    GraphBuilder rhs;
    rhs.add_node_with_id(1, kArm);
    rhs.add_node_with_id(2, kBlock);
    rhs.add_node_with_id(3, kBlock);
    rhs.add_edge_with_id(5, 1, kHolds, 2);
    rule.rhs = rhs.build();

    rule.node_rhs_index = {0, 1, 2};
    rule.edge_rhs_index = {-1};
    rule.nacs = {covered_nac(rule.lhs, 2), busy_arm_nac(rule.lhs, 1)};
    return rule;
}

Rule make_put_down_on_table() {
    Rule rule;
    rule.name = Symbol("putDownOnTable");

    GraphBuilder lhs;
    lhs.add_node_with_id(1, kArm);
    lhs.add_node_with_id(2, kBlock);
    lhs.add_node_with_id(3, kTable);
    lhs.add_edge_with_id(4, 1, kHolds, 2);
    rule.lhs = lhs.build();

    GraphBuilder rhs;
    rhs.add_node_with_id(1, kArm);
    rhs.add_node_with_id(2, kBlock);
    rhs.add_node_with_id(3, kTable);
    rhs.add_edge_with_id(5, 2, kOn, 3);
    rule.rhs = rhs.build();

    rule.node_rhs_index = {0, 1, 2};
    rule.edge_rhs_index = {-1};
    return rule;
}

Rule make_put_down_on_block() {
    Rule rule;
    rule.name = Symbol("putDownOnBlock");

    GraphBuilder lhs;
    lhs.add_node_with_id(1, kArm);
    lhs.add_node_with_id(2, kBlock);
    lhs.add_node_with_id(3, kBlock);
    lhs.add_edge_with_id(4, 1, kHolds, 2);
    rule.lhs = lhs.build();

    GraphBuilder rhs;
    rhs.add_node_with_id(1, kArm);
    rhs.add_node_with_id(2, kBlock);
    rhs.add_node_with_id(3, kBlock);
    rhs.add_edge_with_id(5, 2, kOn, 3);
    rule.rhs = rhs.build();

    rule.node_rhs_index = {0, 1, 2};
    rule.edge_rhs_index = {-1};
    rule.nacs = {covered_nac(rule.lhs, 3)};
    return rule;
}

void check_stacks(int n_blocks, const BlockStacks &stacks,
                  const char *what) {
    std::vector<bool> seen(n_blocks, false);
    for (const std::vector<int> &stack : stacks)
        for (int b : stack) {
            if (b < 0 || b >= n_blocks || seen[b])
                throw std::invalid_argument(
                    std::string(what) + " is not a permutation of the blocks");
            seen[b] = true;
        }
    for (bool s : seen)
        if (!s)
            throw std::invalid_argument(
                std::string(what) + " is not a permutation of the blocks");
}

} // namespace

BlockStacks random_stacks(int n_blocks, std::uint32_t seed) {
    std::mt19937 rng(seed);
    BlockStacks stacks;
    for (int b = 0; b < n_blocks; ++b) {
        // Place each block on the table or on top of an existing stack;
        // rng() % k keeps the draw identical across standard libraries.
        std::uint32_t choice = rng() % (stacks.size() + 1);
        if (choice == stacks.size())
            stacks.push_back({b});
        else
            stacks[choice].push_back(b);
    }
    return stacks;
}

PlanningProblem make_blocksworld(int n_blocks, const BlockStacks &initial,
                                 const BlockStacks &target) {
    if (n_blocks < 1)
        throw std::invalid_argument("n_blocks must be at least 1");
    check_stacks(n_blocks, initial, "initial configuration");
    check_stacks(n_blocks, target, "target configuration");

    PlanningProblem problem;
    problem.name = "blocksworld-" + std::to_string(n_blocks);
    problem.alphabet = {kBlock, kTable, kArm, kOn, kHolds};
    problem.rules = {make_pick_up_from_table(), make_pick_up_from_block(),
                     make_put_down_on_table(), make_put_down_on_block()};

    GraphBuilder init;
    ElementId table = init.add_node(kTable, Symbol("table"));
    init.add_node(kArm, Symbol("arm"));
    std::vector<ElementId> block(n_blocks);
    for (int b = 0; b < n_blocks; ++b)
        block[b] = init.add_node(kBlock, block_name(b));
    for (const std::vector<int> &stack : initial)
        for (size_t i = 0; i < stack.size(); ++i)
            init.add_edge(block[stack[i]], kOn,
                          i == 0 ? table : block[stack[i - 1]]);
    problem.initial = init.build();

    GraphBuilder goal;
    ElementId goal_table = goal.add_node(kTable, Symbol("table"));
    std::vector<ElementId> goal_block(n_blocks);
    for (int b = 0; b < n_blocks; ++b)
        goal_block[b] = goal.add_node(kBlock, block_name(b));
    for (const std::vector<int> &stack : target)
        for (size_t i = 0; i < stack.size(); ++i)
            goal.add_edge(goal_block[stack[i]], kOn,
                          i == 0 ? goal_table : goal_block[stack[i - 1]]);
    problem.target.lhs = goal.build();
    return problem;
}

PlanningProblem gen_blocksworld(const BlocksWorldSpec &spec) {
    if (spec.n_blocks < 1)
        throw std::invalid_argument("n_blocks must be at least 1");
    PlanningProblem problem = make_blocksworld(
        spec.n_blocks, random_stacks(spec.n_blocks, spec.init_seed),
        random_stacks(spec.n_blocks, spec.target_seed));
    problem.name += "-s" + std::to_string(spec.init_seed) + "-t" +
                    std::to_string(spec.target_seed);
    return problem;
}

} // namespace gtplan
