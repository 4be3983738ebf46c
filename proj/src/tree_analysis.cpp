#include "imst/tree_analysis.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace imst {

std::vector<int> tree_path(const SpanningTree& tree, int i, int j) {
    const Graph& g = tree.graph();
    if (i < 0 || i >= g.node_count() || j < 0 || j >= g.node_count()) {
        throw std::out_of_range("node out of range");
    }

    // Walk both endpoints up to their lowest common ancestor.
    std::vector<int> from_i;
    std::vector<int> from_j;
    while (i != j) {
        if (tree.depth(i) >= tree.depth(j)) {
            from_i.push_back(tree.parent_edge(i));
            i = tree.parent_node(i);
        } else {
            from_j.push_back(tree.parent_edge(j));
            j = tree.parent_node(j);
        }
    }
    from_i.insert(from_i.end(), from_j.rbegin(), from_j.rend());
    return from_i;
}

Replacement replacement(const SpanningTree& tree, const ImposedSet& imposed, int edge_id) {
    const Edge& e = tree.graph().edge(edge_id);
    if (tree.contains(edge_id)) {
        throw std::invalid_argument("edge #" + std::to_string(edge_id) +
                                    " is a tree edge; replacement is defined for nontree edges");
    }

    std::optional<int> best;
    for (int id : tree_path(tree, e.u, e.v)) {
        if (imposed.contains(id)) {
            continue;
        }
        const Edge& cand = tree.graph().edge(id);
        if (!best) {
            best = id;
            continue;
        }
        const Edge& cur = tree.graph().edge(*best);
        if (cand.cost > cur.cost || (cand.cost == cur.cost && id < *best)) {
            best = id;
        }
    }

    if (!best) {
        return Replacement{edge_id, std::nullopt, ExtCost::infinity()};
    }
    return Replacement{edge_id, best, ExtCost(e.cost - tree.graph().edge(*best).cost)};
}

std::map<int, Replacement> replacement_table(const SpanningTree& tree, const ImposedSet& imposed) {
    std::map<int, Replacement> table;
    for (const Edge& e : tree.graph().edges()) {
        if (!tree.contains(e.id)) {
            table.emplace(e.id, replacement(tree, imposed, e.id));
        }
    }
    return table;
}

bool check_path_optimality(const SpanningTree& tree) {
    const Graph& g = tree.graph();
    for (const Edge& e : g.edges()) {
        if (tree.contains(e.id)) {
            continue;
        }
        for (int id : tree_path(tree, e.u, e.v)) {
            if (e.cost < g.edge(id).cost) {
                return false;
            }
        }
    }
    return true;
}

bool check_cut_optimality(const SpanningTree& tree) {
    const Graph& g = tree.graph();
    for (int tree_edge : tree.edge_ids()) {
        // Mark the component of tree_edge's u-side after deleting it.
        std::vector<char> u_side(g.node_count(), 0);
        std::queue<int> queue;
        queue.push(g.edge(tree_edge).u);
        u_side[g.edge(tree_edge).u] = 1;
        while (!queue.empty()) {
            int node = queue.front();
            queue.pop();
            for (int id : g.incident(node)) {
                if (id == tree_edge || !tree.contains(id)) {
                    continue;
                }
                int next = g.edge(id).other(node);
                if (!u_side[next]) {
                    u_side[next] = 1;
                    queue.push(next);
                }
            }
        }
        // Every graph edge crossing the cut must cost at least as much.
        for (const Edge& e : g.edges()) {
            if (u_side[e.u] != u_side[e.v] && e.cost < g.edge(tree_edge).cost) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace imst
