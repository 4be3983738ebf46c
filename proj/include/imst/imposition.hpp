#pragma once

#include <optional>
#include <span>
#include <vector>

#include "imst/mst.hpp"

namespace imst {

// A spanning tree together with the edges imposed on it so far. States
// are immutable values: impose() returns a new state, so callers can
// branch from a shared parent for what-if exploration.
class ImpositionState {
public:
    struct Step {
        int imposed_edge;
        std::optional<int> removed_edge;  // nullopt when the edge was already in the tree
    };

    // The minimum spanning tree of g with nothing imposed.
    static ImpositionState base(const Graph& g);

    // Imposes one edge. An edge already in the tree is recorded as a
    // no-op step. Otherwise the replacement swap runs: the maximum-cost
    // non-imposed edge on its tree path leaves, the new edge enters, and
    // the cost grows by exactly the replacement cost. Throws
    // InfeasibleError when the replacement is infinite (the edge would
    // close a cycle of imposed edges).
    ImpositionState impose(int edge_id) const;

    const SpanningTree& tree() const { return tree_; }
    const ImposedSet& imposed() const { return imposed_; }
    const std::vector<Step>& history() const { return history_; }

private:
    ImpositionState(SpanningTree tree, ImposedSet imposed, std::vector<Step> history);

    SpanningTree tree_;
    ImposedSet imposed_;
    std::vector<Step> history_;
};

// Folds impose() over the edge list, starting from the base MST of g.
// Infeasibility at any step is rethrown with the failing step index.
ImpositionState impose_all(const Graph& g, std::span<const int> edge_ids);

}  // namespace imst
