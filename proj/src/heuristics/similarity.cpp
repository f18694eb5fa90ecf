#include "similarity.h"

#include <algorithm>

namespace gtplan {

TypeMultiset type_multiset(const TypedGraph &g) {
    TypeMultiset result;
    for (const Node &n : g.nodes())
        ++result[{n.type, Symbol(), Symbol()}];
    for (const Edge &e : g.edges()) {
        Symbol src_type = g.node(g.node_index(e.src)).type;
        Symbol tgt_type = g.node(g.node_index(e.tgt)).type;
        ++result[{src_type, e.type, tgt_type}];
    }
    return result;
}

int multiset_intersection_size(const TypeMultiset &a, const TypeMultiset &b) {
    int total = 0;
    for (const auto &[key, count] : a) {
        auto it = b.find(key);
        if (it != b.end())
            total += std::min(count, it->second);
    }
    return total;
}

int h_sim(const TypedGraph &state, const Pattern &target) {
    return -multiset_intersection_size(type_multiset(state),
                                       type_multiset(target.lhs));
}

} // namespace gtplan
