#ifndef MATCHER_MORPHISM_H
#define MATCHER_MORPHISM_H

#include "../graph/typed_graph.h"

#include <vector>

namespace gtplan {

/*
  Injective, type/name/structure-preserving mapping from a pattern graph
  into a host graph, indexed by the pattern's node/edge positions.
*/
struct Morphism {
    std::vector<ElementId> node_image; // by pattern node index
    std::vector<ElementId> edge_image; // by pattern edge index

    // Ordered image of all pattern elements (nodes, then edges). This is the
    // canonical match encoding used in plans and duplicate-application keys.
    std::vector<ElementId> encode() const {
        std::vector<ElementId> out(node_image);
        out.insert(out.end(), edge_image.begin(), edge_image.end());
        return out;
    }

    friend bool operator==(const Morphism &a, const Morphism &b) {
        return a.node_image == b.node_image && a.edge_image == b.edge_image;
    }
};

} // namespace gtplan

#endif
