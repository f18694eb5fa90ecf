#include "matcher.h"

#include <algorithm>
#include <cassert>

namespace gtplan {

namespace {

/*
  Backtracking subgraph matcher. Nodes are assigned first, ordered
  most-constrained-first (pinned, then fewest type-compatible host
  candidates, then highest degree); edges are assigned afterwards, which
  keeps multi-edges correct (edge images must be injective too).
*/
class MatchSearch {
public:
    MatchSearch(const TypedGraph &pattern, const TypedGraph &host,
                const MatchOptions &options,
                const std::function<bool(const Morphism &)> &visit)
        : pattern(pattern), host(host), options(options), visit(visit) {
        node_image.assign(pattern.num_nodes(), kUnassigned);
        edge_image.assign(pattern.num_edges(), kUnassigned);
        host_node_used.assign(host.num_nodes(), false);
        compute_node_order();
    }

    bool run() {
        return assign_node(0);
    }

private:
    static constexpr ElementId kUnassigned = 0;

    const TypedGraph &pattern;
    const TypedGraph &host;
    const MatchOptions &options;
    const std::function<bool(const Morphism &)> &visit;

    std::vector<int> node_order;
    std::vector<ElementId> node_image;
    std::vector<ElementId> edge_image;
    std::vector<bool> host_node_used;

    std::optional<ElementId> pinned_node(int pattern_index) const {
        if (pattern_index < static_cast<int>(options.pinned_nodes.size()))
            return options.pinned_nodes[pattern_index];
        return std::nullopt;
    }

    std::optional<ElementId> pinned_edge(int pattern_index) const {
        if (pattern_index < static_cast<int>(options.pinned_edges.size()))
            return options.pinned_edges[pattern_index];
        return std::nullopt;
    }

    bool node_candidate_ok(int pattern_index, int host_index) const {
        const Node &p = pattern.node(pattern_index);
        const Node &h = host.node(host_index);
        if (p.type != h.type)
            return false;
        if (!p.name.empty() && p.name != h.name)
            return false;
        return true;
    }

    void compute_node_order() {
        int n = pattern.num_nodes();
        std::vector<std::tuple<int, int, int, int>> keyed;
        for (int i = 0; i < n; ++i) {
            bool pinned = pinned_node(i).has_value();
            int candidates = 0;
            if (!pinned)
                for (int j = 0; j < host.num_nodes(); ++j)
                    if (node_candidate_ok(i, j))
                        ++candidates;
            keyed.emplace_back(pinned ? 0 : 1, candidates,
                               -pattern.degree(i), i);
        }
        std::sort(keyed.begin(), keyed.end());
        for (auto &[pinned, candidates, degree, index] : keyed)
            node_order.push_back(index);
    }

    // Every pattern edge with both endpoints assigned needs at least one
    // compatible host edge; checked eagerly to prune early.
    bool edges_feasible(int pattern_node) const {
        auto feasible = [&](int e) {
            const Edge &pe = pattern.edge(e);
            ElementId src = node_image[pattern.node_index(pe.src)];
            ElementId tgt = node_image[pattern.node_index(pe.tgt)];
            if (src == kUnassigned || tgt == kUnassigned)
                return true;
            if (auto pin = pinned_edge(e)) {
                int host_index = host.edge_index(*pin);
                if (host_index < 0)
                    return false;
                const Edge &he = host.edge(host_index);
                return he.src == src && he.tgt == tgt && he.type == pe.type;
            }
            int src_index = host.node_index(src);
            for (int he_index : host.out_edges(src_index)) {
                const Edge &he = host.edge(he_index);
                if (he.tgt == tgt && he.type == pe.type &&
                    (!options.candidate_ok ||
                     options.candidate_ok(false, he_index)))
                    return true;
            }
            return false;
        };
        for (int e : pattern.out_edges(pattern_node))
            if (!feasible(e))
                return false;
        for (int e : pattern.in_edges(pattern_node))
            if (!feasible(e))
                return false;
        return true;
    }

    bool assign_node(int depth) {
        if (depth == static_cast<int>(node_order.size()))
            return assign_edge(0);
        int p = node_order[depth];
        auto try_host_node = [&](int h) {
            if (host_node_used[h])
                return true;
            node_image[p] = host.node(h).id;
            host_node_used[h] = true;
            bool keep_going = !edges_feasible(p) || assign_node(depth + 1);
            node_image[p] = kUnassigned;
            host_node_used[h] = false;
            return keep_going;
        };
        if (auto pin = pinned_node(p)) {
            int h = host.node_index(*pin);
            if (h < 0 || !node_candidate_ok(p, h))
                return true;
            return try_host_node(h);
        }
        for (int h = 0; h < host.num_nodes(); ++h) {
            if (!node_candidate_ok(p, h))
                continue;
            if (options.candidate_ok && !options.candidate_ok(true, h))
                continue;
            if (!try_host_node(h))
                return false;
        }
        return true;
    }

    bool assign_edge(int e) {
        if (e == pattern.num_edges()) {
            Morphism m{node_image, edge_image};
            return visit(m);
        }
        const Edge &pe = pattern.edge(e);
        ElementId src = node_image[pattern.node_index(pe.src)];
        ElementId tgt = node_image[pattern.node_index(pe.tgt)];
        auto try_host_edge = [&](int he_index) {
            const Edge &he = host.edge(he_index);
            if (he.src != src || he.tgt != tgt || he.type != pe.type)
                return true;
            for (int prev = 0; prev < e; ++prev)
                if (edge_image[prev] == he.id)
                    return true; // injectivity on edges
            edge_image[e] = he.id;
            bool keep_going = assign_edge(e + 1);
            edge_image[e] = kUnassigned;
            return keep_going;
        };
        if (auto pin = pinned_edge(e)) {
            int he_index = host.edge_index(*pin);
            if (he_index < 0)
                return true;
            return try_host_edge(he_index);
        }
        int src_index = host.node_index(src);
        for (int he_index : host.out_edges(src_index)) {
            if (options.candidate_ok && !options.candidate_ok(false, he_index))
                continue;
            if (!try_host_edge(he_index))
                return false;
        }
        return true;
    }
};

const MatchOptions kNoOptions;

}

void for_each_match(const TypedGraph &pattern, const TypedGraph &host,
                    const MatchOptions &options,
                    const std::function<bool(const Morphism &)> &visit) {
    MatchSearch search(pattern, host, options, visit);
    search.run();
}

std::vector<Morphism> enumerate_matches(const TypedGraph &pattern,
                                        const TypedGraph &host,
                                        const MatchOptions &options) {
    std::vector<Morphism> matches;
    for_each_match(pattern, host, options, [&](const Morphism &m) {
        matches.push_back(m);
        return true;
    });
    std::sort(matches.begin(), matches.end(),
              [](const Morphism &a, const Morphism &b) {
                  return a.encode() < b.encode();
              });
    return matches;
}

std::vector<Morphism> enumerate_matches(const TypedGraph &pattern,
                                        const TypedGraph &host) {
    return enumerate_matches(pattern, host, kNoOptions);
}

bool has_match(const TypedGraph &pattern, const TypedGraph &host,
               const MatchOptions &options) {
    bool found = false;
    for_each_match(pattern, host, options, [&](const Morphism &) {
        found = true;
        return false;
    });
    return found;
}

MatchOptions nac_pinning(const Nac &nac, const Morphism &m) {
    MatchOptions options;
    options.pinned_nodes.assign(nac.graph.num_nodes(), std::nullopt);
    options.pinned_edges.assign(nac.graph.num_edges(), std::nullopt);
    for (size_t i = 0; i < nac.lhs_node_to_nac.size(); ++i)
        options.pinned_nodes[nac.lhs_node_to_nac[i]] = m.node_image[i];
    for (size_t i = 0; i < nac.lhs_edge_to_nac.size(); ++i)
        options.pinned_edges[nac.lhs_edge_to_nac[i]] = m.edge_image[i];
    return options;
}

bool nac_satisfied(const Morphism &m, const Nac &nac,
                   const TypedGraph &host) {
    return !has_match(nac.graph, host, nac_pinning(nac, m));
}

bool pattern_has_match(const Pattern &p, const TypedGraph &host) {
    bool found = false;
    for_each_match(p.lhs, host, MatchOptions{},
                   [&](const Morphism &m) {
                       for (const Nac &nac : p.nacs)
                           if (!nac_satisfied(m, nac, host))
                               return true; // keep searching
                       found = true;
                       return false;
                   });
    return found;
}

std::vector<Morphism> match_pattern(const TypedGraph &lhs,
                                    const std::vector<Nac> &nacs,
                                    const TypedGraph &host) {
    std::vector<Morphism> result;
    for (const Morphism &m : enumerate_matches(lhs, host)) {
        bool ok = true;
        for (const Nac &nac : nacs)
            if (!nac_satisfied(m, nac, host)) {
                ok = false;
                break;
            }
        if (ok)
            result.push_back(m);
    }
    return result;
}

std::vector<Morphism> match_pattern(const Pattern &p, const TypedGraph &host) {
    return match_pattern(p.lhs, p.nacs, host);
}

} // namespace gtplan
