#ifndef DOMAINS_BLOCKS_WORLD_H
#define DOMAINS_BLOCKS_WORLD_H

#include "../gts/planning_problem.h"

#include <cstdint>
#include <vector>

namespace gtplan {

/*
  Blocks World as a graph transformation system. Nodes: one Table, one Arm
  and n named blocks; 'on' edges encode the stacking, a 'holds' edge marks
  the block in the arm. Rules: pickUpFromTable / pickUpFromBlock (NACs:
  block is covered; arm is busy), putDownOnTable, putDownOnBlock (NAC:
  destination is covered). The target is the target stacking as a pattern
  over the named blocks.
*/
struct BlocksWorldSpec {
    int n_blocks = 4;
    std::uint32_t init_seed = 0;
    std::uint32_t target_seed = 1;
};

// A configuration is a list of stacks, each listed bottom to top; block
// indices are 0-based and must form a permutation of 0..n-1.
using BlockStacks = std::vector<std::vector<int>>;

// Throws std::invalid_argument if spec.n_blocks < 1.
PlanningProblem gen_blocksworld(const BlocksWorldSpec &spec);

// Fixed-configuration variant used by tests and the generator.
PlanningProblem make_blocksworld(int n_blocks, const BlockStacks &initial,
                                 const BlockStacks &target);

BlockStacks random_stacks(int n_blocks, std::uint32_t seed);

} // namespace gtplan

#endif
