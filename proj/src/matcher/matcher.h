#ifndef MATCHER_MATCHER_H
#define MATCHER_MATCHER_H

#include "../graph/typed_graph.h"
#include "morphism.h"

#include <functional>
#include <optional>
#include <vector>

namespace gtplan {

/*
  Negative application condition: a graph N extending a pattern's LHS, with
  the (total, injective) embedding of the LHS into N stored as index maps.
  A match m of the LHS satisfies the NAC iff no injective extension
  q: N -> host with q restricted to the LHS equal to m exists.
*/
struct Nac {
    TypedGraph graph;
    std::vector<int> lhs_node_to_nac; // lhs node index -> index in graph
    std::vector<int> lhs_edge_to_nac;
};

struct Pattern {
    TypedGraph lhs;
    std::vector<Nac> nacs;
};

// Candidate filter for unpinned elements; host_index is a node or edge index
// in the host graph.
using CandidateFilter =
    std::function<bool(bool is_node, int host_index)>;

struct MatchOptions {
    // Pre-assigned images by pattern element index (empty vector = none).
    std::vector<std::optional<ElementId>> pinned_nodes;
    std::vector<std::optional<ElementId>> pinned_edges;
    CandidateFilter candidate_ok; // null = accept all
};

// Visits every injective, type/name/structure-preserving morphism.
// Return false from the visitor to stop the enumeration.
void for_each_match(const TypedGraph &pattern, const TypedGraph &host,
                    const MatchOptions &options,
                    const std::function<bool(const Morphism &)> &visit);

// All matches in deterministic order (sorted by image encoding).
std::vector<Morphism> enumerate_matches(const TypedGraph &pattern,
                                        const TypedGraph &host);
std::vector<Morphism> enumerate_matches(const TypedGraph &pattern,
                                        const TypedGraph &host,
                                        const MatchOptions &options);

bool has_match(const TypedGraph &pattern, const TypedGraph &host,
               const MatchOptions &options);

// Pins the NAC graph's LHS part to the images given by m.
MatchOptions nac_pinning(const Nac &nac, const Morphism &m);

// True iff no injective extension of m through the NAC embedding exists.
bool nac_satisfied(const Morphism &m, const Nac &nac, const TypedGraph &host);

// True iff some match of p.lhs satisfies all NACs.
bool pattern_has_match(const Pattern &p, const TypedGraph &host);

// Matches of p.lhs that satisfy all NACs, in deterministic order.
std::vector<Morphism> match_pattern(const TypedGraph &lhs,
                                    const std::vector<Nac> &nacs,
                                    const TypedGraph &host);
std::vector<Morphism> match_pattern(const Pattern &p, const TypedGraph &host);

} // namespace gtplan

#endif
