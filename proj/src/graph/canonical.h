#ifndef GRAPH_CANONICAL_H
#define GRAPH_CANONICAL_H

#include "typed_graph.h"

#include <cstdint>
#include <string>

namespace gtplan {

/*
  Digest of a canonical form of a TypedGraph: equal for isomorphic graphs
  (respecting types and names), stable across runs for the same input.
  Collisions are possible; exact duplicate detection resolves them with
  is_isomorphic.
*/
struct CanonicalKey {
    std::uint64_t digest;

    friend bool operator==(CanonicalKey a, CanonicalKey b) {
        return a.digest == b.digest;
    }
    friend bool operator!=(CanonicalKey a, CanonicalKey b) {
        return a.digest != b.digest;
    }
};

// Canonical form: iterative neighborhood-refinement coloring with a
// backtracking tie-break over non-singleton color classes.
std::string canonical_certificate(const TypedGraph &g);

CanonicalKey canonical_key(const TypedGraph &g);

} // namespace gtplan

template<>
struct std::hash<gtplan::CanonicalKey> {
    size_t operator()(gtplan::CanonicalKey k) const {
        return static_cast<size_t>(k.digest);
    }
};

#endif
