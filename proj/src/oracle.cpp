#include "imst/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "imst/errors.hpp"

namespace imst::oracle {

namespace {

// Minimal disjoint-set kept local to the oracle. Copied at each include
// step of the recursion, so no rollback logic is needed; correctness over
// speed is the point here.
struct MiniDsu {
    std::vector<int> parent;
    int components;

    explicit MiniDsu(int n) : parent(n), components(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) const {
        while (parent[x] != x) {
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
};

struct Enumerator {
    const Graph& g;
    const EnumerationBudget& budget;
    const std::function<void(const std::vector<int>&)>& visit;
    std::vector<int> chosen;
    std::int64_t yielded = 0;

    void recurse(int next, const MiniDsu& dsu) {
        if (static_cast<int>(chosen.size()) == g.node_count() - 1) {
            if (++yielded > budget.max_trees) {
                throw BudgetError("spanning tree enumeration exceeded the cap of " +
                                  std::to_string(budget.max_trees) + " trees");
            }
            visit(chosen);
            return;
        }
        if (next == g.edge_count()) {
            return;
        }

        // Prune branches where even taking every remaining edge cannot
        // connect the graph.
        MiniDsu probe = dsu;
        for (int id = next; id < g.edge_count(); ++id) {
            probe.unite(g.edge(id).u, g.edge(id).v);
        }
        if (probe.components > 1) {
            return;
        }

        const Edge& e = g.edge(next);
        if (dsu.find(e.u) != dsu.find(e.v)) {
            MiniDsu with_edge = dsu;
            with_edge.unite(e.u, e.v);
            chosen.push_back(next);
            recurse(next + 1, with_edge);
            chosen.pop_back();
        }
        recurse(next + 1, dsu);
    }
};

}  // namespace

void for_each_spanning_tree(const Graph& g, const EnumerationBudget& budget,
                            const std::function<void(const std::vector<int>&)>& visit) {
    if (g.node_count() > budget.max_nodes) {
        throw BudgetError("graph has " + std::to_string(g.node_count()) +
                          " nodes, exceeding the oracle cap of " +
                          std::to_string(budget.max_nodes) + " nodes");
    }
    Enumerator e{g, budget, visit, {}, 0};
    e.recurse(0, MiniDsu(g.node_count()));
}

std::vector<std::vector<int>> enumerate_spanning_trees(const Graph& g,
                                                       const EnumerationBudget& budget) {
    std::vector<std::vector<int>> trees;
    for_each_spanning_tree(g, budget, [&](const std::vector<int>& t) { trees.push_back(t); });
    return trees;
}

std::optional<BruteTree> brute_min_tree(const Graph& g, const ImposedSet& imposed,
                                        const EnumerationBudget& budget) {
    std::optional<BruteTree> best;
    const std::vector<int>& required = imposed.ids();
    for_each_spanning_tree(g, budget, [&](const std::vector<int>& tree) {
        if (!std::includes(tree.begin(), tree.end(), required.begin(), required.end())) {
            return;
        }
        std::int64_t cost = 0;
        for (int id : tree) {
            cost += g.edge(id).cost;
        }
        if (!best || cost < best->cost || (cost == best->cost && tree < best->edge_ids)) {
            best = BruteTree{cost, tree};
        }
    });
    return best;
}

}  // namespace imst::oracle
