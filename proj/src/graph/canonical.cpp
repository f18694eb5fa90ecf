#include "canonical.h"

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

namespace gtplan {

namespace {

std::uint64_t fnv1a(const std::string &data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct Canonicalizer {
    const TypedGraph &g;
    int n;
    std::vector<int> edge_type_rank; // per edge index, rank of its type string

    explicit Canonicalizer(const TypedGraph &graph)
        : g(graph), n(graph.num_nodes()) {
        // Rank labels by their string value so the result is run-independent.
        std::vector<std::string> type_strings;
        for (const Edge &e : g.edges())
            type_strings.push_back(e.type.str());
        std::sort(type_strings.begin(), type_strings.end());
        type_strings.erase(
            std::unique(type_strings.begin(), type_strings.end()),
            type_strings.end());
        edge_type_rank.resize(g.num_edges());
        for (int i = 0; i < g.num_edges(); ++i)
            edge_type_rank[i] = static_cast<int>(
                std::lower_bound(type_strings.begin(), type_strings.end(),
                                 g.edge(i).type.str()) -
                type_strings.begin());
    }

    std::vector<int> initial_colors() const {
        std::vector<std::pair<std::string, int>> keyed(n);
        for (int i = 0; i < n; ++i) {
            const Node &node = g.node(i);
            keyed[i] = {node.type.str() + '\x01' + node.name.str(), i};
        }
        std::vector<std::string> keys;
        for (auto &[key, index] : keyed)
            keys.push_back(key);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<int> colors(n);
        for (auto &[key, index] : keyed)
            colors[index] = static_cast<int>(
                std::lower_bound(keys.begin(), keys.end(), key) -
                keys.begin());
        return colors;
    }

    // One neighborhood-refinement pass until the partition is stable.
    void refine(std::vector<int> &colors) const {
        using Signature = std::pair<int, std::vector<std::tuple<int, int, int>>>;
        int num_colors = 0;
        for (int c : colors)
            num_colors = std::max(num_colors, c + 1);
        while (true) {
            std::vector<Signature> sigs(n);
            for (int i = 0; i < n; ++i) {
                auto &neighborhood = sigs[i].second;
                sigs[i].first = colors[i];
                for (int e : g.out_edges(i)) {
                    int other = g.node_index(g.edge(e).tgt);
                    neighborhood.emplace_back(0, edge_type_rank[e],
                                              colors[other]);
                }
                for (int e : g.in_edges(i)) {
                    int other = g.node_index(g.edge(e).src);
                    neighborhood.emplace_back(1, edge_type_rank[e],
                                              colors[other]);
                }
                std::sort(neighborhood.begin(), neighborhood.end());
            }
            std::map<Signature, int> ranks;
            for (const Signature &sig : sigs)
                ranks.emplace(sig, 0);
            int next = 0;
            for (auto &[sig, rank] : ranks)
                rank = next++;
            for (int i = 0; i < n; ++i)
                colors[i] = ranks[sigs[i]];
            if (next == num_colors)
                return;
            num_colors = next;
        }
    }

    // First color class with more than one member, or -1 if discrete.
    int tie_class(const std::vector<int> &colors) const {
        std::vector<int> count(n, 0);
        for (int c : colors)
            ++count[c];
        int best = -1;
        for (int i = 0; i < n; ++i)
            if (count[colors[i]] > 1 &&
                (best == -1 || colors[i] < colors[best]))
                best = i;
        return best == -1 ? -1 : colors[best];
    }

    std::string certificate_from(const std::vector<int> &colors) const {
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i)
            order[colors[i]] = i;
        std::string cert;
        for (int i = 0; i < n; ++i) {
            const Node &node = g.node(order[i]);
            cert += node.type.str();
            cert += '\x01';
            cert += node.name.str();
            cert += '\x02';
        }
        std::vector<std::tuple<int, int, std::string>> edges;
        for (const Edge &e : g.edges())
            edges.emplace_back(colors[g.node_index(e.src)],
                               colors[g.node_index(e.tgt)], e.type.str());
        std::sort(edges.begin(), edges.end());
        for (auto &[src, tgt, type] : edges) {
            cert += std::to_string(src);
            cert += '>';
            cert += std::to_string(tgt);
            cert += '\x01';
            cert += type;
            cert += '\x02';
        }
        return cert;
    }

    void search(std::vector<int> colors, std::string &best) const {
        refine(colors);
        int cls = tie_class(colors);
        if (cls == -1) {
            std::string cert = certificate_from(colors);
            if (best.empty() || cert < best)
                best = std::move(cert);
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (colors[i] != cls)
                continue;
            std::vector<int> branched(colors);
            // Individualize node i: shift everything at or above its class up.
            for (int j = 0; j < n; ++j)
                if (branched[j] >= cls && j != i)
                    ++branched[j];
            search(std::move(branched), best);
        }
    }
};

}

std::string canonical_certificate(const TypedGraph &g) {
    Canonicalizer canon(g);
    std::string best;
    canon.search(canon.initial_colors(), best);
    if (best.empty())
        best = "empty";
    return best;
}

CanonicalKey canonical_key(const TypedGraph &g) {
    return CanonicalKey{fnv1a(canonical_certificate(g))};
}

} // namespace gtplan
