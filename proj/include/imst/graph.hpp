#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace imst {

struct Edge {
    int id;                // position in the graph's edge list
    int u;
    int v;
    std::int64_t cost;

    // The endpoint that is not `node`. `node` must be u or v.
    int other(int node) const { return node == u ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable weighted undirected multigraph. Parallel edges are allowed and
// stay distinct by id; self-loops are rejected. Safe for concurrent reads.
class Graph {
public:
    Graph(int node_count, std::vector<Edge> edges);

    int node_count() const { return node_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(int id) const;
    const std::vector<Edge>& edges() const { return edges_; }

    // Incident edge ids of a node, ascending.
    std::span<const int> incident(int node) const;

    // (edge id, other endpoint) pairs for a node, ascending by edge id.
    std::vector<std::pair<int, int>> neighbors(int node) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int node_count_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incidence_;
};

// Parses the text edge-list format:
//   # comment (anywhere; rest of line ignored)
//   p <node_count> <edge_count>
//   e <u> <v> <cost>          -- exactly edge_count of these, ids in order
// Throws ParseError with the offending 1-based line number.
Graph parse_graph(std::string_view text);

// Inverse of parse_graph: parse_graph(render_graph(g)) == g.
std::string render_graph(const Graph& g);

}  // namespace imst
