#ifndef BENCH_BENCH_H
#define BENCH_BENCH_H

#include "../gts/planning_problem.h"
#include "../heuristics/abstraction.h"
#include "../search/search.h"

#include <iosfwd>
#include <string>
#include <vector>

namespace gtplan {

struct BenchInstance {
    std::string name;       // e.g. "blocksworld-10-s3t4"
    std::string size_group; // e.g. "blocksworld-10"; aggregation key
    PlanningProblem problem;
};

struct ExperimentConfig {
    std::vector<BenchInstance> instances;
    std::vector<std::string> heuristics; // subset of {"abs", "sim"}
    std::vector<std::string> algorithms; // subset of {"gbf", "ehc", "astar"}
    double timeout_seconds = 60.0;
    long max_states = std::numeric_limits<long>::max();
    int repetitions = 1;
    HeuristicConfig heuristic_config;
};

struct BenchRow {
    std::string instance;
    std::string size_group;
    std::string heuristic;
    std::string algorithm;
    int repetition = 0; // -1 marks a per-size aggregate row
    std::string status;
    double plan_length = 0;
    double generated_states = 0;
    double expanded_states = 0;
    double heuristic_time_fraction = 0;
    double total_time = 0;
};

struct BenchReport {
    std::vector<BenchRow> runs;
    std::vector<BenchRow> aggregates; // per (size_group, heuristic, algorithm)
};

/*
  Runs the full (instance x heuristic x algorithm x repetition) matrix.
  Timeouts and other failures are recorded in the status column and the
  matrix continues. Aggregate rows hold per-size means over all repetitions
  and instances of a size group; time-independent columns are deterministic
  across runs of the same config.
*/
BenchReport run_bench(const ExperimentConfig &config);

// Header plus one line per run row, then per-size aggregate rows.
void write_bench_csv(std::ostream &out, const BenchReport &report);

/*
  The stock experiment matrix: Blocks World with 4, 6, 8 and 10 blocks and
  ECUs with 2-4 control-unit columns, two instances per Blocks World size.
*/
std::vector<BenchInstance> default_bench_instances();

} // namespace gtplan

#endif
