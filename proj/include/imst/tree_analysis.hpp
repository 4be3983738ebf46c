#pragma once

#include <map>
#include <optional>
#include <vector>

#include "imst/ext_cost.hpp"
#include "imst/mst.hpp"

namespace imst {

// Outcome of asking how a nontree edge would enter the tree: the
// maximum-cost non-imposed edge on its tree path (the one a swap would
// remove) and the resulting cost increase. Both are infinite when every
// path edge is imposed, i.e. imposing for_edge would close a cycle of
// mandatory edges.
struct Replacement {
    int for_edge;
    std::optional<int> replacement_edge;  // nullopt = no candidate (infinite)
    ExtCost replacement_cost;             // cost(for_edge) - cost(replacement_edge)

    bool is_infinite() const { return !replacement_edge.has_value(); }
};

// Edge ids of the unique simple path between i and j, ordered from i's
// side to j's side. Empty when i == j.
std::vector<int> tree_path(const SpanningTree& tree, int i, int j);

// Replacement for a nontree edge, honoring the imposed set. Ties between
// equal-cost path edges go to the lower edge id. Throws
// std::invalid_argument when edge_id is a tree edge.
Replacement replacement(const SpanningTree& tree, const ImposedSet& imposed, int edge_id);

// Replacement for every nontree edge, keyed by edge id.
std::map<int, Replacement> replacement_table(const SpanningTree& tree, const ImposedSet& imposed);

// Theorem-style optimality checks, usable on any spanning tree of the
// graph. Both hold exactly when the tree has minimum cost.
bool check_path_optimality(const SpanningTree& tree);
bool check_cut_optimality(const SpanningTree& tree);

}  // namespace imst
