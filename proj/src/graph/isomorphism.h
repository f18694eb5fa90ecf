#ifndef GRAPH_ISOMORPHISM_H
#define GRAPH_ISOMORPHISM_H

#include "typed_graph.h"

namespace gtplan {

// Exact check: true iff a type-, name-, and structure-preserving bijection
// exists. Backtracking with invariant pruning; used as the fallback behind
// canonical_key hash-bucket collisions.
bool is_isomorphic(const TypedGraph &g1, const TypedGraph &g2);

} // namespace gtplan

#endif
