#include "bench/bench.h"
#include "domains/blocks_world.h"
#include "domains/ecus.h"
#include "gts/problem_io.h"
#include "search/search.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>

using namespace gtplan;
using nlohmann::json;

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

struct CommonFlags {
    std::string heuristic = "abs";
    std::string algorithm = "gbf";
    double timeout = 60.0;
    long max_states = std::numeric_limits<long>::max();
    int max_abstract_depth = 1000;
    double cap_factor = 2.0;
    std::string output;
    std::string format = "text";
};

HeuristicConfig heuristic_config(const CommonFlags &flags) {
    HeuristicConfig cfg;
    cfg.max_abstract_depth = flags.max_abstract_depth;
    cfg.per_state_cap_factor = flags.cap_factor;
    return cfg;
}

std::ofstream open_output(const std::string &path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    return out;
}

json stats_json(const SearchResult &result) {
    json j;
    j["status"] = search_status_name(result.status);
    j["generated_states"] = result.stats.generated_states;
    j["expanded_states"] = result.stats.expanded_states;
    j["heuristic_calls"] = result.stats.heuristic_calls;
    j["heuristic_time_fraction"] =
        result.stats.total_seconds > 0
            ? result.stats.heuristic_seconds / result.stats.total_seconds
            : 0.0;
    j["total_time"] = result.stats.total_seconds;
    if (result.stats.plan_length)
        j["plan_length"] = *result.stats.plan_length;
    return j;
}

int cmd_solve(const std::string &problem_file, const CommonFlags &flags) {
    PlanningProblem problem = load_problem(problem_file);
    auto heuristic =
        make_heuristic(flags.heuristic, problem, heuristic_config(flags));
    SearchLimits limits{flags.timeout, flags.max_states};
    SearchResult result =
        run_search(flags.algorithm, problem, *heuristic, limits);

    if (flags.format == "json-lines") {
        json j = stats_json(result);
        j["problem"] = problem.name;
        j["heuristic"] = flags.heuristic;
        j["algorithm"] = flags.algorithm;
        if (result.plan) {
            json steps = json::array();
            for (const PlanStep &step : result.plan->steps) {
                json s;
                s["rule"] = step.rule_name;
                s["match"] = step.match_encoding;
                steps.push_back(std::move(s));
            }
            j["plan"] = std::move(steps);
        }
        std::cout << j.dump() << "\n";
    } else {
        if (result.plan) {
            std::cout << "plan (" << result.plan->length() << " steps):\n";
            write_plan(std::cout, *result.plan);
        } else {
            std::cout << "no plan: " << search_status_name(result.status)
                      << "\n";
        }
        std::cout << "status:                  "
                  << search_status_name(result.status) << "\n"
                  << "generated states:        "
                  << result.stats.generated_states << "\n"
                  << "expanded states:         "
                  << result.stats.expanded_states << "\n"
                  << "heuristic calls:         "
                  << result.stats.heuristic_calls << "\n"
                  << "heuristic time fraction: "
                  << (result.stats.total_seconds > 0
                          ? result.stats.heuristic_seconds /
                                result.stats.total_seconds
                          : 0.0)
                  << "\n"
                  << "total time [s]:          " << result.stats.total_seconds
                  << "\n";
    }
    if (!flags.output.empty() && result.plan) {
        std::ofstream out = open_output(flags.output);
        write_plan(out, *result.plan);
    }
    return result.solved() ? kExitSolved : kExitFailure;
}

int cmd_bench(const std::vector<std::string> &problem_files,
              bool default_suite, const std::vector<std::string> &heuristics,
              const std::vector<std::string> &algorithms,
              const CommonFlags &flags, int repetitions) {
    ExperimentConfig config;
    if (default_suite) {
        config.instances = default_bench_instances();
    } else {
        for (const std::string &path : problem_files) {
            PlanningProblem problem = load_problem(path);
            std::string name = problem.name;
            config.instances.push_back({name, name, std::move(problem)});
        }
    }
    config.heuristics = heuristics;
    config.algorithms = algorithms;
    config.timeout_seconds = flags.timeout;
    config.max_states = flags.max_states;
    config.repetitions = repetitions;
    config.heuristic_config = heuristic_config(flags);

    BenchReport report = run_bench(config);
    auto emit = [&](std::ostream &out) {
        if (flags.format == "json-lines") {
            auto dump_row = [&](const BenchRow &row, bool aggregate) {
                json j;
                j["instance"] = row.instance;
                j["size"] = row.size_group;
                j["heuristic"] = row.heuristic;
                j["algorithm"] = row.algorithm;
                if (aggregate)
                    j["repetition"] = "mean";
                else
                    j["repetition"] = row.repetition;
                j["status"] = row.status;
                j["plan_length"] = row.plan_length;
                j["generated_states"] = row.generated_states;
                j["expanded_states"] = row.expanded_states;
                j["heuristic_time_fraction"] = row.heuristic_time_fraction;
                j["total_time"] = row.total_time;
                out << j.dump() << "\n";
            };
            for (const BenchRow &row : report.runs)
                dump_row(row, false);
            for (const BenchRow &row : report.aggregates)
                dump_row(row, true);
        } else {
            write_bench_csv(out, report);
        }
    };
    if (flags.output.empty()) {
        emit(std::cout);
    } else {
        std::ofstream out = open_output(flags.output);
        emit(out);
    }
    return kExitSolved;
}

int cmd_gen(const std::string &domain, int size, unsigned seed,
            bool extra_instance, const std::string &output) {
    PlanningProblem problem;
    if (domain == "blocksworld") {
        problem = gen_blocksworld({size, seed, seed + 1});
    } else if (domain == "ecus") {
        problem = gen_ecus({size, extra_instance});
    } else {
        throw CLI::ValidationError("domain must be blocksworld or ecus");
    }
    if (output.empty()) {
        write_problem(std::cout, problem);
    } else {
        std::ofstream out = open_output(output);
        write_problem(out, problem);
    }
    return kExitSolved;
}

int cmd_validate(const std::string &problem_file,
                 const std::string &plan_file) {
    PlanningProblem problem = load_problem(problem_file);
    Plan plan = load_plan(plan_file);
    PlanValidation validation = validate_plan(problem, plan);
    if (validation.valid) {
        std::cout << "valid plan (" << plan.length() << " steps)\n";
        return kExitSolved;
    }
    std::cout << "invalid plan: step " << validation.failed_step << ": "
              << validation.message << "\n";
    return kExitFailure;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Planning for graph transformation systems"};
    app.require_subcommand(1);

    CommonFlags flags;
    auto add_search_flags = [&](CLI::App *cmd, bool single_run) {
        if (single_run) {
            cmd->add_option("--heuristic", flags.heuristic)
                ->check(CLI::IsMember({"abs", "sim"}));
            cmd->add_option("--algorithm", flags.algorithm)
                ->check(CLI::IsMember({"gbf", "ehc", "astar"}));
        }
        cmd->add_option("--timeout", flags.timeout, "seconds per run")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-states", flags.max_states)
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-abstract-depth", flags.max_abstract_depth)
            ->check(CLI::PositiveNumber);
        cmd->add_option("--cap-factor", flags.cap_factor)
            ->check(CLI::PositiveNumber);
        cmd->add_option("--output", flags.output);
    };

    // solve
    std::string problem_file;
    CLI::App *solve = app.add_subcommand("solve", "solve one problem file");
    solve->add_option("problem", problem_file)->required();
    add_search_flags(solve, true);
    solve->add_option("--format", flags.format)
        ->check(CLI::IsMember({"text", "json-lines"}));

    // bench
    std::vector<std::string> bench_files;
    std::vector<std::string> bench_heuristics{"abs", "sim"};
    std::vector<std::string> bench_algorithms{"gbf"};
    int repetitions = 1;
    bool default_suite = false;
    CLI::App *bench =
        app.add_subcommand("bench", "run an experiment matrix, emit CSV");
    bench->add_option("problems", bench_files);
    bench->add_flag("--default-suite", default_suite,
                    "Blocks World 4-10 and ECUs 2-4 stock instances");
    bench->add_option("--heuristic", bench_heuristics)
        ->check(CLI::IsMember({"abs", "sim"}));
    bench->add_option("--algorithm", bench_algorithms)
        ->check(CLI::IsMember({"gbf", "ehc", "astar"}));
    bench->add_option("--repetitions", repetitions)
        ->check(CLI::PositiveNumber);
    add_search_flags(bench, false);
    bench->add_option("--format", flags.format)
        ->check(CLI::IsMember({"csv", "json-lines"}));

    // gen
    std::string domain;
    int size = 4;
    unsigned seed = 0;
    bool extra_instance = false;
    CLI::App *gen = app.add_subcommand("gen", "generate a benchmark instance");
    gen->add_option("domain", domain, "blocksworld or ecus")->required();
    gen->add_option("size", size, "blocks or control-unit columns")
        ->required()
        ->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "initial-state seed (blocksworld)");
    gen->add_flag("--extra-instance", extra_instance,
                  "add a second instance of c1 (ecus)");
    gen->add_option("--output", flags.output);

    // validate
    std::string plan_file;
    CLI::App *validate =
        app.add_subcommand("validate", "replay a plan against a problem");
    validate->add_option("problem", problem_file)->required();
    validate->add_option("plan", plan_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed())
            return cmd_solve(problem_file, flags);
        if (bench->parsed())
            return cmd_bench(bench_files, default_suite, bench_heuristics,
                             bench_algorithms, flags, repetitions);
        if (gen->parsed())
            return cmd_gen(domain, size, seed, extra_instance, flags.output);
        if (validate->parsed())
            return cmd_validate(problem_file, plan_file);
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
