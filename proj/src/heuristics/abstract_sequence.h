#ifndef HEURISTICS_ABSTRACT_SEQUENCE_H
#define HEURISTICS_ABSTRACT_SEQUENCE_H

#include "../gts/planning_problem.h"

#include <functional>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

namespace gtplan {

enum class ElementStatus { normal, created, deleted };

// Identifies one relaxed rule application within an abstract sequence.
struct RuleApplicationLabel {
    int iteration;
    Symbol rule_name;
    int match_id; // 1-based, per rule and iteration, in match order

    bool operator==(const RuleApplicationLabel &o) const = default;
};

using LabelSet = std::set<int>; // indices into AbstractState::label_table

// Called periodically during abstract-sequence construction; may throw to
// abort a heuristic evaluation that exceeds its deadline.
using PollHook = std::function<void()>;

/*
  Abstract state of the relaxed transition system. The graph only grows:
  deleting an element merely flips its status to deleted, so later relaxed
  applications can still match it. Every element carries the labels of the
  applications that deleted or created it, plus inherited labels (see
  abstract_step); each (rule, match) fires at most once per sequence.
*/
struct AbstractState {
    TypedGraph graph;
    std::unordered_map<ElementId, ElementStatus> status;
    std::unordered_map<ElementId, LabelSet> labels;
    std::set<std::pair<int, std::vector<ElementId>>> applied;
    std::vector<RuleApplicationLabel> label_table;

    explicit AbstractState(const TypedGraph &initial);

    ElementStatus element_status(ElementId id) const {
        auto it = status.find(id);
        return it == status.end() ? ElementStatus::normal : it->second;
    }
    const LabelSet &element_labels(ElementId id) const;
    bool is_deleted(ElementId id) const {
        return element_status(id) == ElementStatus::deleted;
    }
};

struct RelaxedApplication {
    const Rule *rule;
    Morphism match;
    // Labels of deleted elements occurring in NAC occurrence extensions of
    // the match; propagated to this application's created/deleted elements.
    LabelSet licensing_labels;
};

/*
  All (rule, match) pairs applicable in the relaxed sense: LHS matching
  ignores status entirely, a NAC blocks only if its occurrence (including
  the matched LHS image) consists entirely of status=normal elements, and
  pairs already fired are skipped. Deterministic order: rule order, then
  match order.
*/
std::vector<RelaxedApplication>
relaxed_applicable(const AbstractState &a, const std::vector<Rule> &rules,
                   const PollHook &poll = {});

// Fires all relaxed applications in parallel: marks deletions, adds created
// elements, attaches fresh labels and propagates inherited ones. If
// lhs_inherit_all_labels is false (the default), LHS inheritance carries
// only the labels of created elements in the match image.
AbstractState abstract_step(const AbstractState &a,
                            const std::vector<Rule> &rules, int iteration,
                            bool lhs_inherit_all_labels = false,
                            const PollHook &poll = {});

/*
  Minimum, over relaxed matches of the target, of the number of distinct
  labels attached to the matched elements. The target LHS may match deleted
  elements; a target NAC blocks a match only if some occurrence extension
  consists entirely of non-deleted elements (a deletion anywhere in the
  occurrence licenses the relaxation). nullopt = no relaxed target match.
*/
std::optional<int> relaxed_goal_value(const AbstractState &a,
                                      const Pattern &target,
                                      const PollHook &poll = {});

} // namespace gtplan

#endif
