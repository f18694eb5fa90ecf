#ifndef GRAPH_TYPED_GRAPH_H
#define GRAPH_TYPED_GRAPH_H

#include "../utils/symbol.h"

#include <cstdint>
#include <vector>

namespace gtplan {

using ElementId = std::uint32_t;

struct Node {
    ElementId id;
    Symbol type;
    Symbol name; // empty symbol = unnamed
};

struct Edge {
    ElementId id;
    ElementId src;
    ElementId tgt;
    Symbol type;
};

/*
  Typed directed multigraph. Immutable after construction; nodes and edges
  share one id space and ids are unique within a graph. Parallel edges of the
  same type are allowed. Construct through GraphBuilder, which enforces the
  invariants (no dangling edges, unique ids, unique names).
*/
class TypedGraph {
public:
    TypedGraph() = default;

    int num_nodes() const {return static_cast<int>(nodes_.size());}
    int num_edges() const {return static_cast<int>(edges_.size());}
    int num_elements() const {return num_nodes() + num_edges();}

    const Node &node(int index) const {return nodes_[index];}
    const Edge &edge(int index) const {return edges_[index];}
    const std::vector<Node> &nodes() const {return nodes_;}
    const std::vector<Edge> &edges() const {return edges_;}

    // Index of the node/edge with the given id, or -1.
    int node_index(ElementId id) const;
    int edge_index(ElementId id) const;
    bool has_node(ElementId id) const {return node_index(id) >= 0;}
    bool has_edge_id(ElementId id) const {return edge_index(id) >= 0;}

    // Edge indices incident to the node at the given node index.
    const std::vector<int> &out_edges(int node_index) const {
        return out_edges_[node_index];
    }
    const std::vector<int> &in_edges(int node_index) const {
        return in_edges_[node_index];
    }
    int degree(int node_index) const {
        return static_cast<int>(out_edges_[node_index].size() +
                                in_edges_[node_index].size());
    }

    bool has_parallel_edge(ElementId src, Symbol type, ElementId tgt) const;

    ElementId max_id() const {return max_id_;}

private:
    friend class GraphBuilder;

    std::vector<Node> nodes_; // sorted by id
    std::vector<Edge> edges_; // sorted by id
    std::vector<std::vector<int>> out_edges_;
    std::vector<std::vector<int>> in_edges_;
    ElementId max_id_ = 0;
};

/*
  Single-threaded builder. Ids can be assigned automatically (max + 1) or
  explicitly (parser, derivations). build() validates the graph invariants
  and throws std::logic_error on violation.
*/
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(const TypedGraph &base);

    ElementId add_node(Symbol type, Symbol name = Symbol());
    void add_node_with_id(ElementId id, Symbol type, Symbol name = Symbol());
    ElementId add_edge(ElementId src, Symbol type, ElementId tgt);
    void add_edge_with_id(ElementId id, ElementId src, Symbol type,
                          ElementId tgt);

    // Deleting a node also drops its incident edges (SPO dangling removal).
    void delete_node(ElementId id);
    void delete_edge(ElementId id);

    bool contains_node(ElementId id) const;
    ElementId next_id() const {return max_id_ + 1;}

    TypedGraph build() const;

private:
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<ElementId> deleted_nodes_;
    std::vector<ElementId> deleted_edges_;
    ElementId max_id_ = 0;
};

} // namespace gtplan

#endif
