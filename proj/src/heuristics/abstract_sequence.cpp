#include "abstract_sequence.h"

#include "../matcher/matcher.h"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <tuple>

namespace gtplan {

namespace {

const LabelSet kEmptyLabels;

// Filter restricting unpinned candidates to status=normal elements.
CandidateFilter normal_filter(const AbstractState &a) {
    return [&a](bool is_node, int host_index) {
        ElementId id = is_node ? a.graph.node(host_index).id
                               : a.graph.edge(host_index).id;
        return a.element_status(id) == ElementStatus::normal;
    };
}

CandidateFilter non_deleted_filter(const AbstractState &a) {
    return [&a](bool is_node, int host_index) {
        ElementId id = is_node ? a.graph.node(host_index).id
                               : a.graph.edge(host_index).id;
        return !a.is_deleted(id);
    };
}

bool image_all(const Morphism &m, const AbstractState &a,
               bool (*pred)(ElementStatus)) {
    for (ElementId id : m.node_image)
        if (!pred(a.element_status(id)))
            return false;
    for (ElementId id : m.edge_image)
        if (!pred(a.element_status(id)))
            return false;
    return true;
}

bool is_normal(ElementStatus s) { return s == ElementStatus::normal; }

// Runs the poll hook on every candidate probe so oversized enumerations
// stay interruptible.
CandidateFilter with_poll(const PollHook &poll, CandidateFilter inner) {
    if (!poll)
        return inner;
    return [poll, inner](bool is_node, int host_index) {
        poll();
        return !inner || inner(is_node, host_index);
    };
}

} // namespace

AbstractState::AbstractState(const TypedGraph &initial) : graph(initial) {}

const LabelSet &AbstractState::element_labels(ElementId id) const {
    auto it = labels.find(id);
    return it == labels.end() ? kEmptyLabels : it->second;
}

namespace {

// Parallel edges with identical endpoints, type and status are structurally
// interchangeable for LHS matching. Firing a separate application for every
// copy makes the abstract graph grow multiplicatively (each fresh copy spawns
// fresh matches, which spawn fresh copies), so rule firing only considers the
// k oldest copies of each class, where k is the largest number of parallel
// edges any rule LHS can actually bind at once. NAC evaluation, label
// licensing and goal matching stay exact over all copies.
CandidateFilter parallel_edge_representatives(const AbstractState &a,
                                              int copies_needed) {
    using ClassKey = std::tuple<ElementId, ElementId, Symbol, ElementStatus>;
    auto ranks = std::make_shared<std::vector<bool>>(a.graph.num_edges());
    std::map<ClassKey, int> count; // edges are ordered by id already
    for (int i = 0; i < a.graph.num_edges(); ++i) {
        const Edge &e = a.graph.edge(i);
        int &c = count[{e.src, e.tgt, e.type, a.element_status(e.id)}];
        (*ranks)[i] = c < copies_needed;
        ++c;
    }
    return [ranks](bool is_node, int host_index) {
        return is_node || (*ranks)[host_index];
    };
}

int max_parallel_lhs_edges(const Rule &rule) {
    std::map<std::tuple<ElementId, ElementId, Symbol>, int> count;
    int best = 1;
    for (const Edge &e : rule.lhs.edges())
        best = std::max(best, ++count[{e.src, e.tgt, e.type}]);
    return best;
}

} // namespace

std::vector<RelaxedApplication>
relaxed_applicable(const AbstractState &a, const std::vector<Rule> &rules,
                   const PollHook &poll) {
    std::vector<RelaxedApplication> result;
    for (size_t ri = 0; ri < rules.size(); ++ri) {
        const Rule &rule = rules[ri];
        // The relaxed LHS matches against every element, deleted or not,
        // but only one representative of each parallel-edge class.
        MatchOptions lhs_options;
        lhs_options.candidate_ok = with_poll(
            poll,
            parallel_edge_representatives(a, max_parallel_lhs_edges(rule)));
        for (const Morphism &m :
             enumerate_matches(rule.lhs, a.graph, lhs_options)) {
            if (a.applied.count({static_cast<int>(ri), m.encode()}))
                continue;
            bool blocked = false;
            LabelSet licensing;
            for (const Nac &nac : rule.nacs) {
                MatchOptions pinned = nac_pinning(nac, m);
                pinned.candidate_ok = with_poll(poll, nullptr);
                // A NAC only blocks while its whole occurrence, including
                // the LHS image, is untouched by the abstraction.
                if (image_all(m, a, is_normal)) {
                    MatchOptions filtered = nac_pinning(nac, m);
                    filtered.candidate_ok = with_poll(poll, normal_filter(a));
                    if (has_match(nac.graph, a.graph, filtered)) {
                        blocked = true;
                        break;
                    }
                }
                // Deleted elements in any occurrence extension license the
                // relaxation; their labels are inherited on firing.
                for_each_match(nac.graph, a.graph, pinned,
                               [&](const Morphism &ext) {
                                   for (ElementId id : ext.node_image)
                                       if (a.is_deleted(id))
                                           licensing.insert(
                                               a.element_labels(id).begin(),
                                               a.element_labels(id).end());
                                   for (ElementId id : ext.edge_image)
                                       if (a.is_deleted(id))
                                           licensing.insert(
                                               a.element_labels(id).begin(),
                                               a.element_labels(id).end());
                                   return true;
                               });
            }
            if (!blocked)
                result.push_back({&rule, m, std::move(licensing)});
        }
    }
    return result;
}

AbstractState abstract_step(const AbstractState &a,
                            const std::vector<Rule> &rules, int iteration,
                            bool lhs_inherit_all_labels, const PollHook &poll) {
    assert(iteration >= 1);
    std::vector<RelaxedApplication> apps = relaxed_applicable(a, rules, poll);

    AbstractState next = a;
    GraphBuilder builder(a.graph);
    std::unordered_map<const Rule *, int> match_counter;

    for (const RelaxedApplication &app : apps) {
        if (poll)
            poll();
        const Rule &rule = *app.rule;
        int rule_index =
            static_cast<int>(app.rule - rules.data());
        int match_id = ++match_counter[app.rule];

        int label = static_cast<int>(next.label_table.size());
        next.label_table.push_back({iteration, rule.name, match_id});

        LabelSet inherited = app.licensing_labels;
        auto inherit_from = [&](ElementId id) {
            if (lhs_inherit_all_labels ||
                next.element_status(id) == ElementStatus::created) {
                const LabelSet &ls = next.element_labels(id);
                inherited.insert(ls.begin(), ls.end());
            }
        };
        for (ElementId id : app.match.node_image)
            inherit_from(id);
        for (ElementId id : app.match.edge_image)
            inherit_from(id);

        LabelSet attached = inherited;
        attached.insert(label);

        auto mark_deleted = [&](ElementId id) {
            next.status[id] = ElementStatus::deleted;
            next.labels[id].insert(attached.begin(), attached.end());
        };
        for (int i = 0; i < rule.lhs.num_nodes(); ++i)
            if (rule.deletes_node(i))
                mark_deleted(app.match.node_image[i]);
        for (int i = 0; i < rule.lhs.num_edges(); ++i)
            if (rule.deletes_edge(i))
                mark_deleted(app.match.edge_image[i]);

        // Created elements get fresh ids; parallel copies from distinct
        // matches stay distinct because their labels differ.
        std::vector<int> rhs_lhs = rule.rhs_to_lhs_node();
        std::vector<ElementId> rhs_node_image(rule.rhs.num_nodes(), 0);
        for (int j = 0; j < rule.rhs.num_nodes(); ++j) {
            if (rhs_lhs[j] >= 0) {
                rhs_node_image[j] = app.match.node_image[rhs_lhs[j]];
            } else {
                const Node &n = rule.rhs.node(j);
                ElementId id = builder.add_node(n.type, n.name);
                rhs_node_image[j] = id;
                next.status[id] = ElementStatus::created;
                next.labels[id] = attached;
            }
        }
        std::vector<int> created_edges = rule.created_edge_indices();
        for (int j : created_edges) {
            const Edge &e = rule.rhs.edge(j);
            ElementId src = rhs_node_image[rule.rhs.node_index(e.src)];
            ElementId tgt = rhs_node_image[rule.rhs.node_index(e.tgt)];
            ElementId id = builder.add_edge(src, e.type, tgt);
            next.status[id] = ElementStatus::created;
            next.labels[id] = attached;
        }

        next.applied.insert({rule_index, app.match.encode()});
    }
    next.graph = builder.build();
    return next;
}

std::optional<int> relaxed_goal_value(const AbstractState &a,
                                      const Pattern &target,
                                      const PollHook &poll) {
    std::optional<int> best;
    MatchOptions lhs_options;
    lhs_options.candidate_ok = with_poll(poll, nullptr);
    for (const Morphism &m :
         enumerate_matches(target.lhs, a.graph, lhs_options)) {
        bool blocked = false;
        for (const Nac &nac : target.nacs) {
            // Only deletions license relaxing a target NAC: it blocks iff
            // some occurrence extension whose own (non-LHS) elements are
            // all non-deleted exists. The pinned LHS part bypasses the
            // filter deliberately.
            MatchOptions filtered = nac_pinning(nac, m);
            filtered.candidate_ok = with_poll(poll, non_deleted_filter(a));
            if (has_match(nac.graph, a.graph, filtered)) {
                blocked = true;
                break;
            }
        }
        if (blocked)
            continue;
        if (poll)
            poll();
        LabelSet combined;
        auto collect = [&](ElementId id) {
            const LabelSet &ls = a.element_labels(id);
            combined.insert(ls.begin(), ls.end());
        };
        for (ElementId id : m.node_image)
            collect(id);
        for (ElementId id : m.edge_image)
            collect(id);
        int value = static_cast<int>(combined.size());
        if (!best || value < *best)
            best = value;
    }
    return best;
}

} // namespace gtplan
