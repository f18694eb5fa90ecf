#ifndef HEURISTICS_HEURISTIC_H
#define HEURISTICS_HEURISTIC_H

#include "../graph/typed_graph.h"

#include <chrono>
#include <limits>
#include <optional>

namespace gtplan {

// Dead-end marker; states with this value are pruned from the open list.
constexpr int kInfiniteHeuristic = std::numeric_limits<int>::max();

// Thrown by evaluate() when the deadline set via set_deadline passes
// mid-evaluation; the search reports a timeout.
struct HeuristicTimeout {};

class Heuristic {
public:
    virtual ~Heuristic() = default;
    virtual int evaluate(const TypedGraph &state) = 0;

    // Evaluations past this point may abort with HeuristicTimeout.
    virtual void
    set_deadline(std::optional<std::chrono::steady_clock::time_point>) {}
};

} // namespace gtplan

#endif
