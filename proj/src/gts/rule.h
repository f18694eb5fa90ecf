#ifndef GTS_RULE_H
#define GTS_RULE_H

#include "../matcher/matcher.h"

#include <vector>

namespace gtplan {

/*
  Graph transformation rule with SPO semantics. The partial rule morphism
  lhs -> rhs is stored as index maps; -1 marks an LHS element as deleted.
  RHS elements outside the morphism image are created on application.
*/
struct Rule {
    Symbol name;
    TypedGraph lhs;
    TypedGraph rhs;
    std::vector<int> node_rhs_index; // lhs node index -> rhs node index or -1
    std::vector<int> edge_rhs_index; // lhs edge index -> rhs edge index or -1
    std::vector<Nac> nacs;

    bool deletes_node(int lhs_node_index) const {
        return node_rhs_index[lhs_node_index] < 0;
    }
    bool deletes_edge(int lhs_edge_index) const {
        return edge_rhs_index[lhs_edge_index] < 0;
    }
    bool is_pure_creation() const {
        for (int i : node_rhs_index)
            if (i < 0)
                return false;
        for (int i : edge_rhs_index)
            if (i < 0)
                return false;
        return true;
    }

    // RHS element indices outside the rule morphism image.
    std::vector<int> created_node_indices() const;
    std::vector<int> created_edge_indices() const;
    // rhs node index -> lhs node index or -1 (created)
    std::vector<int> rhs_to_lhs_node() const;
};

} // namespace gtplan

#endif
