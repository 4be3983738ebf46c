#include "imst/mst.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "imst/errors.hpp"
#include "imst/union_find.hpp"

namespace imst {

SpanningTree::SpanningTree(const Graph& g, std::vector<int> edge_ids)
    : graph_(&g),
      edge_ids_(std::move(edge_ids)),
      in_tree_(g.edge_count(), 0),
      parent_node_(g.node_count(), -1),
      parent_edge_(g.node_count(), -1),
      depth_(g.node_count(), -1) {
    std::sort(edge_ids_.begin(), edge_ids_.end());
    if (std::adjacent_find(edge_ids_.begin(), edge_ids_.end()) != edge_ids_.end()) {
        throw std::invalid_argument("duplicate edge id in spanning tree");
    }
    if (static_cast<int>(edge_ids_.size()) != g.node_count() - 1) {
        throw std::invalid_argument("spanning tree needs exactly node_count-1 edges");
    }
    for (int id : edge_ids_) {
        in_tree_[g.edge(id).id] = 1;
        total_cost_ += g.edge(id).cost;
    }

    // Root the tree at node 0 with a BFS over tree edges. n-1 edges plus
    // full reachability implies acyclicity.
    std::queue<int> queue;
    queue.push(0);
    depth_[0] = 0;
    int reached = 1;
    while (!queue.empty()) {
        int node = queue.front();
        queue.pop();
        for (int id : g.incident(node)) {
            if (!in_tree_[id]) {
                continue;
            }
            int next = g.edge(id).other(node);
            if (depth_[next] >= 0) {
                continue;
            }
            depth_[next] = depth_[node] + 1;
            parent_node_[next] = node;
            parent_edge_[next] = id;
            ++reached;
            queue.push(next);
        }
    }
    if (reached != g.node_count()) {
        throw std::invalid_argument("edge set does not span the graph");
    }
}

ImposedSet::ImposedSet(const Graph& g, std::vector<int> ids) : ids_(std::move(ids)) {
    for (int id : ids_) {
        if (id < 0 || id >= g.edge_count()) {
            throw std::out_of_range("imposed edge id " + std::to_string(id) + " out of range");
        }
    }
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool ImposedSet::contains(int edge_id) const {
    return std::binary_search(ids_.begin(), ids_.end(), edge_id);
}

namespace {

// The cycle closed by adding `closing` to the forest formed by `forest_edges`
// (which connect closing's endpoints). Returned as ascending edge ids,
// closing edge included.
std::vector<int> cycle_through(const Graph& g, const std::vector<int>& forest_edges, int closing) {
    std::vector<char> in_forest(g.edge_count(), 0);
    for (int id : forest_edges) {
        in_forest[id] = 1;
    }
    const Edge& c = g.edge(closing);

    // BFS from c.u to c.v over forest edges, remembering arrival edges.
    std::vector<int> via_edge(g.node_count(), -1);
    std::vector<char> seen(g.node_count(), 0);
    std::queue<int> queue;
    queue.push(c.u);
    seen[c.u] = 1;
    while (!queue.empty() && !seen[c.v]) {
        int node = queue.front();
        queue.pop();
        for (int id : g.incident(node)) {
            if (!in_forest[id]) {
                continue;
            }
            int next = g.edge(id).other(node);
            if (!seen[next]) {
                seen[next] = 1;
                via_edge[next] = id;
                queue.push(next);
            }
        }
    }

    std::vector<int> cycle{closing};
    for (int node = c.v; node != c.u;) {
        int id = via_edge[node];
        cycle.push_back(id);
        node = g.edge(id).other(node);
    }
    std::sort(cycle.begin(), cycle.end());
    return cycle;
}

std::string format_ids(const std::vector<int>& ids) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        out << (i ? ", " : "") << '#' << ids[i];
    }
    return out.str();
}

SpanningTree greedy_tree(const Graph& g, const ImposedSet& imposed) {
    UnionFind components(g.node_count());
    std::vector<int> chosen;
    chosen.reserve(g.node_count() - 1);

    // Contraction of the imposed edges: pre-merge their endpoints so the
    // greedy never considers undoing them.
    for (int id : imposed.ids()) {
        const Edge& e = g.edge(id);
        if (!components.unite(e.u, e.v)) {
            auto cycle = cycle_through(g, chosen, id);
            throw InfeasibleError("imposed edges form a cycle: " + format_ids(cycle), cycle);
        }
        chosen.push_back(id);
    }

    std::vector<int> order(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Edge& ea = g.edge(a);
        const Edge& eb = g.edge(b);
        return ea.cost != eb.cost ? ea.cost < eb.cost : a < b;
    });

    for (int id : order) {
        const Edge& e = g.edge(id);
        if (components.unite(e.u, e.v)) {
            chosen.push_back(id);
        }
    }

    if (components.components() != 1) {
        int rep0 = components.find(0);
        int other = -1;
        for (int node = 1; node < g.node_count(); ++node) {
            if (components.find(node) != rep0) {
                other = node;
                break;
            }
        }
        throw InfeasibleError("graph is disconnected: no path between node 0 and node " +
                              std::to_string(other));
    }
    return SpanningTree(g, std::move(chosen));
}

}  // namespace

SpanningTree minimum_spanning_tree(const Graph& g) { return greedy_tree(g, ImposedSet()); }

SpanningTree constrained_mst(const Graph& g, const ImposedSet& imposed) {
    return greedy_tree(g, imposed);
}

}  // namespace imst
