#include "bench.h"

#include "../domains/blocks_world.h"
#include "../domains/ecus.h"

#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

namespace gtplan {

namespace {

// Run rows carry integral counts; aggregate rows carry means.
std::string format_count(double v, bool aggregate) {
    std::ostringstream s;
    if (aggregate) {
        s.setf(std::ios::fixed);
        s.precision(2);
        s << v;
    } else {
        s << static_cast<long>(v);
    }
    return s.str();
}

std::string format_time(double v) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(4);
    s << v;
    return s.str();
}

void write_row(std::ostream &out, const BenchRow &row) {
    bool agg = row.repetition < 0;
    out << row.instance << ',' << row.size_group << ',' << row.heuristic
        << ',' << row.algorithm << ','
        << (agg ? std::string("mean") : std::to_string(row.repetition)) << ','
        << row.status << ',' << format_count(row.plan_length, agg) << ','
        << format_count(row.generated_states, agg) << ','
        << format_count(row.expanded_states, agg) << ','
        << format_time(row.heuristic_time_fraction) << ','
        << format_time(row.total_time) << '\n';
}

} // namespace

BenchReport run_bench(const ExperimentConfig &config) {
    BenchReport report;
    for (const BenchInstance &instance : config.instances) {
        for (const std::string &heuristic_name : config.heuristics) {
            for (const std::string &algorithm : config.algorithms) {
                for (int rep = 0; rep < config.repetitions; ++rep) {
                    auto heuristic =
                        make_heuristic(heuristic_name, instance.problem,
                                       config.heuristic_config);
                    SearchLimits limits{config.timeout_seconds,
                                        config.max_states};
                    SearchResult result = run_search(
                        algorithm, instance.problem, *heuristic, limits);
                    BenchRow row;
                    row.instance = instance.name;
                    row.size_group = instance.size_group;
                    row.heuristic = heuristic_name;
                    row.algorithm = algorithm;
                    row.repetition = rep;
                    row.status = search_status_name(result.status);
                    row.plan_length = static_cast<double>(
                        result.stats.plan_length.value_or(0));
                    row.generated_states =
                        static_cast<double>(result.stats.generated_states);
                    row.expanded_states =
                        static_cast<double>(result.stats.expanded_states);
                    row.heuristic_time_fraction =
                        result.stats.total_seconds > 0
                            ? result.stats.heuristic_seconds /
                                  result.stats.total_seconds
                            : 0.0;
                    row.total_time = result.stats.total_seconds;
                    report.runs.push_back(std::move(row));
                }
            }
        }
    }

    // Per-size means, keyed in first-appearance order of the size group.
    std::vector<std::string> group_order;
    std::map<std::tuple<std::string, std::string, std::string>,
             std::vector<const BenchRow *>>
        groups;
    for (const BenchRow &row : report.runs) {
        auto key = std::make_tuple(row.size_group, row.heuristic,
                                   row.algorithm);
        auto [it, fresh] = groups.try_emplace(key);
        it->second.push_back(&row);
        (void)fresh;
    }
    for (const auto &[key, rows] : groups) {
        BenchRow agg;
        agg.instance = std::get<0>(key);
        agg.size_group = std::get<0>(key);
        agg.heuristic = std::get<1>(key);
        agg.algorithm = std::get<2>(key);
        agg.repetition = -1;
        int solved = 0;
        for (const BenchRow *row : rows) {
            if (row->status == "solved")
                ++solved;
            agg.plan_length += row->plan_length;
            agg.generated_states += row->generated_states;
            agg.expanded_states += row->expanded_states;
            agg.heuristic_time_fraction += row->heuristic_time_fraction;
            agg.total_time += row->total_time;
        }
        double n = static_cast<double>(rows.size());
        agg.plan_length /= n;
        agg.generated_states /= n;
        agg.expanded_states /= n;
        agg.heuristic_time_fraction /= n;
        agg.total_time /= n;
        agg.status = "solved:" + std::to_string(solved) + "/" +
                     std::to_string(rows.size());
        report.aggregates.push_back(std::move(agg));
    }
    return report;
}

void write_bench_csv(std::ostream &out, const BenchReport &report) {
    out << "instance,size,heuristic,algorithm,repetition,status,plan_length,"
           "generated_states,expanded_states,heuristic_time_fraction,"
           "total_time\n";
    for (const BenchRow &row : report.runs)
        write_row(out, row);
    for (const BenchRow &row : report.aggregates)
        write_row(out, row);
}

std::vector<BenchInstance> default_bench_instances() {
    std::vector<BenchInstance> instances;
    const std::pair<unsigned, unsigned> seed_pairs[] = {{3, 4}, {6, 7}};
    for (int n : {4, 6, 8, 10}) {
        std::string group = "blocksworld-" + std::to_string(n);
        for (auto [s, t] : seed_pairs) {
            std::string name = group + "-s" + std::to_string(s) + "t" +
                               std::to_string(t);
            instances.push_back(
                {name, group, gen_blocksworld({n, s, t})});
        }
    }
    for (int n : {2, 3, 4}) {
        std::string group = "ecus-" + std::to_string(n);
        instances.push_back({group, group, gen_ecus({n, false})});
        instances.push_back({group + "-x", group, gen_ecus({n, true})});
    }
    return instances;
}

} // namespace gtplan
