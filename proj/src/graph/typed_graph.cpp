#include "typed_graph.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gtplan {

namespace {
// Binary search over records sorted by id.
template<typename T>
int index_of(const std::vector<T> &records, ElementId id) {
    auto it = std::lower_bound(
        records.begin(), records.end(), id,
        [](const T &r, ElementId value) {return r.id < value;});
    if (it == records.end() || it->id != id)
        return -1;
    return static_cast<int>(it - records.begin());
}
}

int TypedGraph::node_index(ElementId id) const {
    return index_of(nodes_, id);
}

int TypedGraph::edge_index(ElementId id) const {
    return index_of(edges_, id);
}

bool TypedGraph::has_parallel_edge(ElementId src, Symbol type,
                                   ElementId tgt) const {
    int src_index = node_index(src);
    if (src_index < 0)
        return false;
    for (int edge_index : out_edges_[src_index]) {
        const Edge &e = edges_[edge_index];
        if (e.tgt == tgt && e.type == type)
            return true;
    }
    return false;
}

GraphBuilder::GraphBuilder(const TypedGraph &base)
    : nodes_(base.nodes_), edges_(base.edges_), max_id_(base.max_id_) {
}

ElementId GraphBuilder::add_node(Symbol type, Symbol name) {
    ElementId id = max_id_ + 1;
    add_node_with_id(id, type, name);
    return id;
}

void GraphBuilder::add_node_with_id(ElementId id, Symbol type, Symbol name) {
    nodes_.push_back(Node{id, type, name});
    max_id_ = std::max(max_id_, id);
}

ElementId GraphBuilder::add_edge(ElementId src, Symbol type, ElementId tgt) {
    ElementId id = max_id_ + 1;
    add_edge_with_id(id, src, type, tgt);
    return id;
}

void GraphBuilder::add_edge_with_id(ElementId id, ElementId src, Symbol type,
                                    ElementId tgt) {
    edges_.push_back(Edge{id, src, tgt, type});
    max_id_ = std::max(max_id_, id);
}

void GraphBuilder::delete_node(ElementId id) {
    deleted_nodes_.push_back(id);
}

void GraphBuilder::delete_edge(ElementId id) {
    deleted_edges_.push_back(id);
}

bool GraphBuilder::contains_node(ElementId id) const {
    for (const Node &n : nodes_)
        if (n.id == id)
            return true;
    return false;
}

TypedGraph TypedGraph_build_error(const std::string &message) {
    throw std::logic_error("TypedGraph: " + message);
}

TypedGraph GraphBuilder::build() const {
    std::unordered_set<ElementId> dead_nodes(deleted_nodes_.begin(),
                                             deleted_nodes_.end());
    std::unordered_set<ElementId> dead_edges(deleted_edges_.begin(),
                                             deleted_edges_.end());
    TypedGraph g;
    for (const Node &n : nodes_)
        if (!dead_nodes.count(n.id))
            g.nodes_.push_back(n);
    for (const Edge &e : edges_) {
        if (dead_edges.count(e.id))
            continue;
        // SPO: edges incident to a deleted node disappear with it.
        if (dead_nodes.count(e.src) || dead_nodes.count(e.tgt))
            continue;
        g.edges_.push_back(e);
    }
    std::sort(g.nodes_.begin(), g.nodes_.end(),
              [](const Node &a, const Node &b) {return a.id < b.id;});
    std::sort(g.edges_.begin(), g.edges_.end(),
              [](const Edge &a, const Edge &b) {return a.id < b.id;});

    std::unordered_set<ElementId> ids;
    std::unordered_set<std::uint32_t> names;
    for (const Node &n : g.nodes_) {
        if (n.id == 0)
            TypedGraph_build_error("element id 0 is reserved");
        if (!ids.insert(n.id).second)
            TypedGraph_build_error("duplicate element id");
        if (!n.name.empty() && !names.insert(n.name.value()).second)
            TypedGraph_build_error("duplicate node name " + n.name.str());
    }
    g.out_edges_.resize(g.nodes_.size());
    g.in_edges_.resize(g.nodes_.size());
    for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) {
        const Edge &e = g.edges_[i];
        if (e.id == 0)
            TypedGraph_build_error("element id 0 is reserved");
        if (!ids.insert(e.id).second)
            TypedGraph_build_error("duplicate element id");
        int src_index = g.node_index(e.src);
        int tgt_index = g.node_index(e.tgt);
        if (src_index < 0 || tgt_index < 0)
            TypedGraph_build_error("dangling edge");
        g.out_edges_[src_index].push_back(i);
        g.in_edges_[tgt_index].push_back(i);
    }
    g.max_id_ = max_id_;
    for (const Node &n : g.nodes_)
        g.max_id_ = std::max(g.max_id_, n.id);
    for (const Edge &e : g.edges_)
        g.max_id_ = std::max(g.max_id_, e.id);
    return g;
}

} // namespace gtplan
