#ifndef HEURISTICS_SIMILARITY_H
#define HEURISTICS_SIMILARITY_H

#include "heuristic.h"
#include "../matcher/matcher.h"

#include <array>
#include <map>

namespace gtplan {

/*
  Similarity heuristic: counts how many typed elements state and target have
  in common, as multisets, and negates the count so that smaller is better.
  Edges are keyed by (source type, edge type, target type); NACs are
  ignored.
*/

// Key: (type,) for nodes, (src type, edge type, tgt type) for edges.
using TypeKey = std::array<Symbol, 3>;
using TypeMultiset = std::map<TypeKey, int>;

TypeMultiset type_multiset(const TypedGraph &g);

int multiset_intersection_size(const TypeMultiset &a, const TypeMultiset &b);

int h_sim(const TypedGraph &state, const Pattern &target);

class SimilarityHeuristic : public Heuristic {
public:
    explicit SimilarityHeuristic(const Pattern &target)
        : target_multiset(type_multiset(target.lhs)) {}

    int evaluate(const TypedGraph &state) override {
        return -multiset_intersection_size(type_multiset(state),
                                           target_multiset);
    }

private:
    TypeMultiset target_multiset;
};

} // namespace gtplan

#endif
