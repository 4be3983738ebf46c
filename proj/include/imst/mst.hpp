#pragma once

#include <cstdint>
#include <vector>

#include "imst/graph.hpp"

namespace imst {

// A spanning tree of a Graph: n-1 edge ids plus parent links rooted at
// node 0 for path walks. Immutable after construction; the referenced
// graph must outlive the tree.
class SpanningTree {
public:
    // Validates that `edge_ids` is a spanning tree of g.
    SpanningTree(const Graph& g, std::vector<int> edge_ids);

    const Graph& graph() const { return *graph_; }
    int node_count() const { return graph_->node_count(); }

    const std::vector<int>& edge_ids() const { return edge_ids_; }  // ascending
    bool contains(int edge_id) const { return in_tree_[edge_id] != 0; }
    std::int64_t total_cost() const { return total_cost_; }

    // Parent links; -1 at the root (node 0).
    int parent_node(int node) const { return parent_node_[node]; }
    int parent_edge(int node) const { return parent_edge_[node]; }
    int depth(int node) const { return depth_[node]; }

private:
    const Graph* graph_;
    std::vector<int> edge_ids_;
    std::vector<char> in_tree_;
    std::vector<int> parent_node_;
    std::vector<int> parent_edge_;
    std::vector<int> depth_;
    std::int64_t total_cost_ = 0;
};

// A set of edge ids that every admissible spanning tree must contain.
// Validates id range and deduplicates; acyclicity is checked by the
// solvers, which report the offending cycle.
class ImposedSet {
public:
    ImposedSet() = default;
    ImposedSet(const Graph& g, std::vector<int> ids);

    const std::vector<int>& ids() const { return ids_; }  // ascending
    bool contains(int edge_id) const;
    bool empty() const { return ids_.empty(); }
    std::size_t size() const { return ids_.size(); }

private:
    std::vector<int> ids_;
};

// Minimum spanning tree by greedy selection over edges sorted by
// (cost, id). Throws InfeasibleError naming two separated nodes when g
// is disconnected.
SpanningTree minimum_spanning_tree(const Graph& g);

// Minimum spanning tree among those containing every imposed edge.
// Imposed edges are pre-merged in the union-find (endpoint contraction)
// before the greedy runs. Throws InfeasibleError listing the cycle's
// edge ids when the imposed edges close a cycle.
SpanningTree constrained_mst(const Graph& g, const ImposedSet& imposed);

}  // namespace imst
