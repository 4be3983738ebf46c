#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "imst/graph.hpp"
#include "imst/mst.hpp"

namespace imst::oracle {

// Caps for exhaustive enumeration. Exceeding either throws BudgetError.
struct EnumerationBudget {
    int max_nodes = 8;
    std::int64_t max_trees = 1'000'000;
};

// Visits every distinct spanning tree of g exactly once, as ascending
// edge ids. Parallel edges yield distinct trees. Deliberately independent
// of the solver modules: a plain include/exclude recursion over the edge
// list with connectivity pruning.
void for_each_spanning_tree(const Graph& g, const EnumerationBudget& budget,
                            const std::function<void(const std::vector<int>&)>& visit);

std::vector<std::vector<int>> enumerate_spanning_trees(const Graph& g,
                                                       const EnumerationBudget& budget);

struct BruteTree {
    std::int64_t cost;
    std::vector<int> edge_ids;  // ascending
};

// Minimum-cost enumerated tree containing every imposed edge, ties broken
// by lexicographically smallest edge-id set. nullopt when no spanning
// tree contains the imposed set.
std::optional<BruteTree> brute_min_tree(const Graph& g, const ImposedSet& imposed,
                                        const EnumerationBudget& budget);

}  // namespace imst::oracle
