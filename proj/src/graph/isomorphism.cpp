#include "isomorphism.h"

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

namespace gtplan {

namespace {

using EdgeKey = std::tuple<int, int, Symbol>; // src index, tgt index, type

std::map<EdgeKey, int> edge_counts(const TypedGraph &g,
                                   const std::vector<int> &node_map) {
    std::map<EdgeKey, int> counts;
    for (const Edge &e : g.edges()) {
        int src = g.node_index(e.src);
        int tgt = g.node_index(e.tgt);
        ++counts[{node_map.empty() ? src : node_map[src],
                  node_map.empty() ? tgt : node_map[tgt], e.type}];
    }
    return counts;
}

struct IsoSearch {
    const TypedGraph &g1;
    const TypedGraph &g2;
    std::vector<int> mapping;      // g1 node index -> g2 node index
    std::vector<bool> used;

    bool compatible(int a, int b) const {
        const Node &n1 = g1.node(a);
        const Node &n2 = g2.node(b);
        if (n1.type != n2.type || n1.name != n2.name)
            return false;
        if (g1.out_edges(a).size() != g2.out_edges(b).size() ||
            g1.in_edges(a).size() != g2.in_edges(b).size())
            return false;
        return true;
    }

    // Edges of g1 between already-mapped nodes must exist with matching
    // multiplicity in g2.
    bool edges_consistent(int a) const {
        auto count_between = [](const TypedGraph &g, int from, int to,
                                Symbol type) {
            int count = 0;
            for (int e : g.out_edges(from)) {
                const Edge &edge = g.edge(e);
                if (g.node_index(edge.tgt) == to && edge.type == type)
                    ++count;
            }
            return count;
        };
        for (int e : g1.out_edges(a)) {
            const Edge &edge = g1.edge(e);
            int tgt = g1.node_index(edge.tgt);
            if (mapping[tgt] < 0)
                continue;
            if (count_between(g1, a, tgt, edge.type) !=
                count_between(g2, mapping[a], mapping[tgt], edge.type))
                return false;
        }
        for (int e : g1.in_edges(a)) {
            const Edge &edge = g1.edge(e);
            int src = g1.node_index(edge.src);
            if (mapping[src] < 0 || src == a)
                continue;
            if (count_between(g1, src, a, edge.type) !=
                count_between(g2, mapping[src], mapping[a], edge.type))
                return false;
        }
        return true;
    }

    bool extend(int a) {
        if (a == g1.num_nodes())
            return edge_counts(g1, mapping) ==
                   edge_counts(g2, std::vector<int>());
        for (int b = 0; b < g2.num_nodes(); ++b) {
            if (used[b] || !compatible(a, b))
                continue;
            mapping[a] = b;
            used[b] = true;
            if (edges_consistent(a) && extend(a + 1))
                return true;
            mapping[a] = -1;
            used[b] = false;
        }
        return false;
    }
};

}

bool is_isomorphic(const TypedGraph &g1, const TypedGraph &g2) {
    if (g1.num_nodes() != g2.num_nodes() || g1.num_edges() != g2.num_edges())
        return false;
    auto invariant = [](const TypedGraph &g) {
        std::vector<std::tuple<Symbol, Symbol, int, int>> keyed;
        for (int i = 0; i < g.num_nodes(); ++i)
            keyed.emplace_back(g.node(i).type, g.node(i).name,
                               static_cast<int>(g.out_edges(i).size()),
                               static_cast<int>(g.in_edges(i).size()));
        std::sort(keyed.begin(), keyed.end());
        return keyed;
    };
    if (invariant(g1) != invariant(g2))
        return false;
    IsoSearch search{g1, g2,
                     std::vector<int>(g1.num_nodes(), -1),
                     std::vector<bool>(g2.num_nodes(), false)};
    return search.extend(0);
}

} // namespace gtplan
