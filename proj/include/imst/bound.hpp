#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "imst/ext_cost.hpp"
#include "imst/mst.hpp"

namespace imst {

// One imposed edge's share of the lower bound. Tree edges of the base
// MST contribute 0 and carry no replacement edge.
struct BoundContribution {
    int edge;
    std::optional<int> replacement_edge;
    ExtCost replacement_cost;
};

struct BoundReport {
    std::int64_t base_cost;                     // cost of the unconstrained MST
    std::vector<BoundContribution> contributions;  // ascending edge id
    ExtCost lower_bound;                        // base_cost + sum of contributions
    std::optional<std::int64_t> exact_cost;     // constrained optimum, when requested
    std::optional<std::int64_t> gap;            // exact_cost - lower_bound
};

// Lower bound on the cost of any spanning tree containing every edge of
// `imposed`: base MST cost plus the sum of the imposed edges' replacement
// costs, each evaluated on the base MST with nothing imposed. Imposed
// edges that are already tree edges contribute 0. Throws InfeasibleError
// when g is disconnected or the imposed edges close a cycle.
BoundReport lower_bound(const Graph& g, const ImposedSet& imposed, bool compute_exact);

}  // namespace imst
