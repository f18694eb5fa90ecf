#ifndef TESTS_TEST_UTIL_H
#define TESTS_TEST_UTIL_H

#include "graph/typed_graph.h"
#include "gts/rule.h"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace gtplan::testing {

inline Symbol sym(const std::string &s) { return Symbol(s); }

/*
  Random typed graph over a small fixed alphabet (node types A/B/C, edge
  types e/f). A named_fraction share of nodes get unique names so that
  name-preservation paths are exercised too.
*/
inline TypedGraph random_graph(std::mt19937 &rng, int n_nodes, int n_edges,
                               double named_fraction = 0.2) {
    const Symbol node_types[] = {sym("A"), sym("B"), sym("C")};
    const Symbol edge_types[] = {sym("e"), sym("f")};
    GraphBuilder builder;
    std::vector<ElementId> nodes;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n_nodes; ++i) {
        Symbol name;
        if (coin(rng) < named_fraction)
            name = sym("x" + std::to_string(i));
        nodes.push_back(builder.add_node(node_types[rng() % 3], name));
    }
    for (int i = 0; i < n_edges && n_nodes > 0; ++i)
        builder.add_edge(nodes[rng() % nodes.size()], edge_types[rng() % 2],
                         nodes[rng() % nodes.size()]);
    return builder.build();
}

// Relabels ids by building the same graph with shuffled insertion order and
// shifted explicit ids; isomorphic to g by construction.
inline TypedGraph relabeled_copy(const TypedGraph &g, std::mt19937 &rng) {
    std::vector<int> node_order(g.num_nodes());
    for (size_t i = 0; i < node_order.size(); ++i)
        node_order[i] = static_cast<int>(i);
    std::shuffle(node_order.begin(), node_order.end(), rng);
    ElementId offset = g.max_id() + 1 + rng() % 100;
    GraphBuilder builder;
    for (int index : node_order) {
        const Node &n = g.node(index);
        builder.add_node_with_id(n.id + offset, n.type, n.name);
    }
    std::vector<int> edge_order(g.num_edges());
    for (size_t i = 0; i < edge_order.size(); ++i)
        edge_order[i] = static_cast<int>(i);
    std::shuffle(edge_order.begin(), edge_order.end(), rng);
    for (int index : edge_order) {
        const Edge &e = g.edge(index);
        builder.add_edge_with_id(e.id + offset, e.src + offset, e.type,
                                 e.tgt + offset);
    }
    return builder.build();
}

/*
  Random rule over the same alphabet: an LHS of 1-3 nodes and up to 3 edges,
  each element independently deleted or preserved, plus up to 2 created
  nodes/edges on the RHS.
*/
inline Rule random_rule(std::mt19937 &rng) {
    const Symbol node_types[] = {sym("A"), sym("B"), sym("C")};
    const Symbol edge_types[] = {sym("e"), sym("f")};
    Rule rule;
    rule.name = sym("random");

    int n_lhs_nodes = 1 + static_cast<int>(rng() % 3);
    GraphBuilder lhs;
    std::vector<ElementId> lhs_nodes;
    for (int i = 0; i < n_lhs_nodes; ++i)
        lhs_nodes.push_back(lhs.add_node(node_types[rng() % 3]));
    int n_lhs_edges = static_cast<int>(rng() % 3);
    std::vector<std::pair<ElementId, ElementId>> lhs_edge_ends;
    for (int i = 0; i < n_lhs_edges; ++i) {
        ElementId src = lhs_nodes[rng() % lhs_nodes.size()];
        ElementId tgt = lhs_nodes[rng() % lhs_nodes.size()];
        lhs.add_edge(src, edge_types[rng() % 2], tgt);
        lhs_edge_ends.push_back({src, tgt});
    }
    rule.lhs = lhs.build();

    // RHS: keep preserved elements under the same ids, then add creations.
    std::vector<bool> keep_node(rule.lhs.num_nodes());
    for (int i = 0; i < rule.lhs.num_nodes(); ++i)
        keep_node[i] = rng() % 4 != 0; // delete ~25%
    GraphBuilder rhs;
    for (int i = 0; i < rule.lhs.num_nodes(); ++i)
        if (keep_node[i]) {
            const Node &n = rule.lhs.node(i);
            rhs.add_node_with_id(n.id, n.type, n.name);
        }
    std::vector<bool> keep_edge(rule.lhs.num_edges());
    for (int i = 0; i < rule.lhs.num_edges(); ++i) {
        const Edge &e = rule.lhs.edge(i);
        bool ends_kept = keep_node[rule.lhs.node_index(e.src)] &&
                         keep_node[rule.lhs.node_index(e.tgt)];
        keep_edge[i] = ends_kept && rng() % 4 != 0;
        if (keep_edge[i])
            rhs.add_edge_with_id(e.id, e.src, e.type, e.tgt);
    }
    std::vector<ElementId> rhs_nodes;
    for (int i = 0; i < rule.lhs.num_nodes(); ++i)
        if (keep_node[i])
            rhs_nodes.push_back(rule.lhs.node(i).id);
    int n_created_nodes = static_cast<int>(rng() % 3);
    for (int i = 0; i < n_created_nodes; ++i)
        rhs_nodes.push_back(rhs.add_node(node_types[rng() % 3]));
    int n_created_edges = static_cast<int>(rng() % 3);
    for (int i = 0; i < n_created_edges && !rhs_nodes.empty(); ++i)
        rhs.add_edge(rhs_nodes[rng() % rhs_nodes.size()],
                     edge_types[rng() % 2],
                     rhs_nodes[rng() % rhs_nodes.size()]);
    rule.rhs = rhs.build();

    for (int i = 0; i < rule.lhs.num_nodes(); ++i)
        rule.node_rhs_index.push_back(
            keep_node[i] ? rule.rhs.node_index(rule.lhs.node(i).id) : -1);
    for (int i = 0; i < rule.lhs.num_edges(); ++i)
        rule.edge_rhs_index.push_back(
            keep_edge[i] ? rule.rhs.edge_index(rule.lhs.edge(i).id) : -1);
    return rule;
}

// Rule with lhs = rhs and identity morphism.
inline Rule identity_rule(const TypedGraph &lhs) {
    Rule rule;
    rule.name = sym("identity");
    rule.lhs = lhs;
    rule.rhs = lhs;
    for (int i = 0; i < lhs.num_nodes(); ++i)
        rule.node_rhs_index.push_back(i);
    for (int i = 0; i < lhs.num_edges(); ++i)
        rule.edge_rhs_index.push_back(i);
    return rule;
}

} // namespace gtplan::testing

#endif
