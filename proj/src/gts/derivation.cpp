#include "derivation.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gtplan {

std::vector<int> Rule::created_node_indices() const {
    std::vector<bool> preserved(rhs.num_nodes(), false);
    for (int i : node_rhs_index)
        if (i >= 0)
            preserved[i] = true;
    std::vector<int> created;
    for (int i = 0; i < rhs.num_nodes(); ++i)
        if (!preserved[i])
            created.push_back(i);
    return created;
}

std::vector<int> Rule::created_edge_indices() const {
    std::vector<bool> preserved(rhs.num_edges(), false);
    for (int i : edge_rhs_index)
        if (i >= 0)
            preserved[i] = true;
    std::vector<int> created;
    for (int i = 0; i < rhs.num_edges(); ++i)
        if (!preserved[i])
            created.push_back(i);
    return created;
}

std::vector<int> Rule::rhs_to_lhs_node() const {
    std::vector<int> out(rhs.num_nodes(), -1);
    for (int i = 0; i < static_cast<int>(node_rhs_index.size()); ++i)
        if (node_rhs_index[i] >= 0)
            out[node_rhs_index[i]] = i;
    return out;
}

bool is_valid_match(const Rule &r, const Morphism &m,
                    const TypedGraph &host) {
    if (static_cast<int>(m.node_image.size()) != r.lhs.num_nodes() ||
        static_cast<int>(m.edge_image.size()) != r.lhs.num_edges())
        return false;
    std::unordered_set<ElementId> seen;
    for (int i = 0; i < r.lhs.num_nodes(); ++i) {
        int h = host.node_index(m.node_image[i]);
        if (h < 0 || !seen.insert(m.node_image[i]).second)
            return false;
        const Node &pn = r.lhs.node(i);
        const Node &hn = host.node(h);
        if (pn.type != hn.type)
            return false;
        if (!pn.name.empty() && pn.name != hn.name)
            return false;
    }
    for (int i = 0; i < r.lhs.num_edges(); ++i) {
        int h = host.edge_index(m.edge_image[i]);
        if (h < 0 || !seen.insert(m.edge_image[i]).second)
            return false;
        const Edge &pe = r.lhs.edge(i);
        const Edge &he = host.edge(h);
        if (pe.type != he.type)
            return false;
        if (m.node_image[r.lhs.node_index(pe.src)] != he.src ||
            m.node_image[r.lhs.node_index(pe.tgt)] != he.tgt)
            return false;
    }
    for (const Nac &nac : r.nacs)
        if (!nac_satisfied(m, nac, host))
            return false;
    return true;
}

TypedGraph apply_rule(const Rule &r, const Morphism &m,
                      const TypedGraph &host) {
    if (!is_valid_match(r, m, host))
        throw std::invalid_argument("apply_rule: invalid match for rule " +
                                    r.name.str());
    GraphBuilder builder(host);
    for (int i = 0; i < r.lhs.num_nodes(); ++i)
        if (r.deletes_node(i))
            builder.delete_node(m.node_image[i]);
    for (int i = 0; i < r.lhs.num_edges(); ++i)
        if (r.deletes_edge(i))
            builder.delete_edge(m.edge_image[i]);

    // Host image of each RHS node: preserved nodes map through the rule
    // morphism, created nodes get fresh ids.
    std::vector<int> rhs_to_lhs = r.rhs_to_lhs_node();
    std::vector<ElementId> rhs_node_image(r.rhs.num_nodes(), 0);
    for (int i = 0; i < r.rhs.num_nodes(); ++i)
        if (rhs_to_lhs[i] >= 0)
            rhs_node_image[i] = m.node_image[rhs_to_lhs[i]];
    for (int i : r.created_node_indices()) {
        const Node &rn = r.rhs.node(i);
        rhs_node_image[i] = builder.add_node(rn.type, rn.name);
    }

    std::vector<bool> deleted_node(host.num_nodes() + 1, false);
    std::unordered_set<ElementId> deleted_node_ids;
    for (int i = 0; i < r.lhs.num_nodes(); ++i)
        if (r.deletes_node(i))
            deleted_node_ids.insert(m.node_image[i]);

    // Surviving-edge census for idempotent edge creation.
    auto edge_survives = [&](const Edge &e) {
        if (deleted_node_ids.count(e.src) || deleted_node_ids.count(e.tgt))
            return false;
        for (int i = 0; i < r.lhs.num_edges(); ++i)
            if (r.deletes_edge(i) && m.edge_image[i] == e.id)
                return false;
        return true;
    };
    std::vector<std::tuple<ElementId, ElementId, Symbol>> present_edges;
    for (const Edge &e : host.edges())
        if (edge_survives(e))
            present_edges.emplace_back(e.src, e.tgt, e.type);

    for (int i : r.created_edge_indices()) {
        const Edge &re = r.rhs.edge(i);
        ElementId src = rhs_node_image[r.rhs.node_index(re.src)];
        ElementId tgt = rhs_node_image[r.rhs.node_index(re.tgt)];
        std::tuple<ElementId, ElementId, Symbol> key{src, tgt, re.type};
        if (std::find(present_edges.begin(), present_edges.end(), key) !=
            present_edges.end())
            continue; // collapse parallel same-type edge
        builder.add_edge(src, re.type, tgt);
        present_edges.push_back(key);
    }
    return builder.build();
}

std::vector<std::pair<const Rule *, Morphism>>
applicable_transformations(const std::vector<Rule> &rules,
                           const TypedGraph &host) {
    std::vector<std::pair<const Rule *, Morphism>> result;
    for (const Rule &rule : rules) {
        for (const Morphism &m : match_pattern(rule.lhs, rule.nacs, host))
            result.emplace_back(&rule, m);
    }
    return result;
}

} // namespace gtplan
