#include "oracles.h"

#include "gts/derivation.h"

#include <algorithm>
#include <deque>
#include <functional>

namespace gtplan::oracles {

namespace {

bool node_compatible(const Node &p, const Node &h) {
    return p.type == h.type && (p.name.empty() || p.name == h.name);
}

// Multiset equality of edges under the given node bijection: greedily pair
// each edge of a with an unused edge of b carrying the same mapped
// endpoints and type. Sound because same-signature edges are
// interchangeable.
bool edges_correspond(const TypedGraph &a, const TypedGraph &b,
                      const std::vector<int> &node_map) {
    std::vector<bool> used(b.num_edges(), false);
    for (const Edge &ea : a.edges()) {
        ElementId src = b.node(node_map[a.node_index(ea.src)]).id;
        ElementId tgt = b.node(node_map[a.node_index(ea.tgt)]).id;
        bool found = false;
        for (int j = 0; j < b.num_edges(); ++j) {
            const Edge &eb = b.edge(j);
            if (!used[j] && eb.src == src && eb.tgt == tgt &&
                eb.type == ea.type) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

} // namespace

bool brute_force_isomorphic(const TypedGraph &a, const TypedGraph &b) {
    if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges())
        return false;
    // Try every type/name compatible node bijection; edges are checked at
    // the leaves only.
    std::vector<int> node_map(a.num_nodes(), -1);
    std::vector<bool> used(b.num_nodes(), false);
    std::function<bool(int)> extend = [&](int i) {
        if (i == a.num_nodes())
            return edges_correspond(a, b, node_map);
        for (int j = 0; j < b.num_nodes(); ++j) {
            if (used[j] || a.node(i).type != b.node(j).type ||
                a.node(i).name != b.node(j).name)
                continue;
            used[j] = true;
            node_map[i] = j;
            if (extend(i + 1))
                return true;
            used[j] = false;
        }
        return false;
    };
    return extend(0);
}

std::vector<Morphism> brute_force_matches(const TypedGraph &pattern,
                                          const TypedGraph &host) {
    std::vector<Morphism> result;
    std::vector<int> node_map(pattern.num_nodes(), -1);
    std::vector<int> edge_map(pattern.num_edges(), -1);
    std::vector<bool> node_used(host.num_nodes(), false);
    std::vector<bool> edge_used(host.num_edges(), false);

    std::function<void(int)> assign_edges = [&](int pe) {
        if (pe == pattern.num_edges()) {
            Morphism m;
            for (int i = 0; i < pattern.num_nodes(); ++i)
                m.node_image.push_back(host.node(node_map[i]).id);
            for (int i = 0; i < pattern.num_edges(); ++i)
                m.edge_image.push_back(host.edge(edge_map[i]).id);
            result.push_back(std::move(m));
            return;
        }
        const Edge &p = pattern.edge(pe);
        ElementId src = host.node(node_map[pattern.node_index(p.src)]).id;
        ElementId tgt = host.node(node_map[pattern.node_index(p.tgt)]).id;
        for (int j = 0; j < host.num_edges(); ++j) {
            const Edge &h = host.edge(j);
            if (edge_used[j] || h.type != p.type || h.src != src ||
                h.tgt != tgt)
                continue;
            edge_used[j] = true;
            edge_map[pe] = j;
            assign_edges(pe + 1);
            edge_used[j] = false;
        }
    };
    std::function<void(int)> assign_nodes = [&](int pn) {
        if (pn == pattern.num_nodes()) {
            assign_edges(0);
            return;
        }
        for (int j = 0; j < host.num_nodes(); ++j) {
            if (node_used[j] ||
                !node_compatible(pattern.node(pn), host.node(j)))
                continue;
            node_used[j] = true;
            node_map[pn] = j;
            assign_nodes(pn + 1);
            node_used[j] = false;
        }
    };
    assign_nodes(0);
    std::sort(result.begin(), result.end(),
              [](const Morphism &a, const Morphism &b) {
                  return a.encode() < b.encode();
              });
    return result;
}

std::vector<Morphism> brute_force_pattern_matches(const Pattern &pattern,
                                                  const TypedGraph &host) {
    std::vector<Morphism> result;
    for (const Morphism &m : brute_force_matches(pattern.lhs, host)) {
        bool blocked = false;
        for (const Nac &nac : pattern.nacs) {
            // An extension is any full NAC match agreeing with m on the
            // embedded LHS part.
            for (const Morphism &ext :
                 brute_force_matches(nac.graph, host)) {
                bool agrees = true;
                for (size_t i = 0; i < m.node_image.size() && agrees; ++i)
                    agrees = ext.node_image[nac.lhs_node_to_nac[i]] ==
                             m.node_image[i];
                for (size_t i = 0; i < m.edge_image.size() && agrees; ++i)
                    agrees = ext.edge_image[nac.lhs_edge_to_nac[i]] ==
                             m.edge_image[i];
                if (agrees) {
                    blocked = true;
                    break;
                }
            }
            if (blocked)
                break;
        }
        if (!blocked)
            result.push_back(m);
    }
    return result;
}

StateSpace exhaustive_state_space(const PlanningProblem &problem,
                                  size_t max_states) {
    StateSpace space;
    space.states.push_back(problem.initial);
    space.distance.push_back(0);
    std::deque<size_t> queue{0};
    while (!queue.empty()) {
        size_t index = queue.front();
        queue.pop_front();
        TypedGraph state = space.states[index];
        for (const auto &[rule, match] :
             applicable_transformations(problem.rules, state)) {
            TypedGraph succ = apply_rule(*rule, match, state);
            bool known = false;
            for (const TypedGraph &seen : space.states) {
                if (brute_force_isomorphic(seen, succ)) {
                    known = true;
                    break;
                }
            }
            if (known)
                continue;
            if (space.states.size() >= max_states)
                return space; // complete stays false
            space.states.push_back(std::move(succ));
            space.distance.push_back(space.distance[index] + 1);
            queue.push_back(space.states.size() - 1);
        }
    }
    space.complete = true;
    space.is_goal.reserve(space.states.size());
    for (const TypedGraph &state : space.states)
        space.is_goal.push_back(pattern_has_match(problem.target, state));
    return space;
}

} // namespace gtplan::oracles
