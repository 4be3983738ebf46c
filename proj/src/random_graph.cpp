#include "imst/random_graph.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace imst {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw std::invalid_argument("uniform: empty range");
    }
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) {  // full 64-bit range
        return static_cast<std::int64_t>(engine_());
    }
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
}

Graph random_connected_graph(Rng& rng, int node_count, int edge_count, std::int64_t min_cost,
                             std::int64_t max_cost) {
    if (node_count < 1) {
        throw std::invalid_argument("random graph needs at least one node");
    }
    if (edge_count < node_count - 1) {
        throw std::invalid_argument("too few edges for a connected graph");
    }

    struct Stub {
        int u, v;
        std::int64_t cost;
    };
    std::vector<Stub> stubs;
    stubs.reserve(edge_count);

    // Random recursive tree guarantees connectivity.
    for (int node = 1; node < node_count; ++node) {
        int anchor = static_cast<int>(rng.uniform(0, node - 1));
        stubs.push_back(Stub{anchor, node, rng.uniform(min_cost, max_cost)});
    }
    while (static_cast<int>(stubs.size()) < edge_count) {
        int u = static_cast<int>(rng.uniform(0, node_count - 1));
        int v = static_cast<int>(rng.uniform(0, node_count - 2));
        if (v >= u) {
            ++v;  // uniform over v != u
        }
        stubs.push_back(Stub{u, v, rng.uniform(min_cost, max_cost)});
    }

    // Shuffle so tree edges do not always get the low ids.
    for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i) {
        int j = static_cast<int>(rng.uniform(0, i));
        std::swap(stubs[i], stubs[j]);
    }

    std::vector<Edge> edges;
    edges.reserve(stubs.size());
    for (std::size_t i = 0; i < stubs.size(); ++i) {
        edges.push_back(Edge{static_cast<int>(i), stubs[i].u, stubs[i].v, stubs[i].cost});
    }
    return Graph(node_count, std::move(edges));
}

}  // namespace imst
