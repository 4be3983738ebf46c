#pragma once

#include <cstdint>
#include <random>

#include "imst/graph.hpp"

namespace imst {

// Deterministic random source. Bounded draws use rejection sampling on
// the raw engine output, so a given seed produces the same sequence on
// every platform (std::uniform_int_distribution would not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// Connected random multigraph: a random spanning tree plus random extra
// edges (parallel edges possible), edge order shuffled, costs uniform in
// [min_cost, max_cost]. Requires edge_count >= node_count - 1.
Graph random_connected_graph(Rng& rng, int node_count, int edge_count, std::int64_t min_cost = 1,
                             std::int64_t max_cost = 100);

}  // namespace imst
