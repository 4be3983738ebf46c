#include "imst/imposition.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "imst/errors.hpp"
#include "imst/tree_analysis.hpp"

namespace imst {

ImpositionState::ImpositionState(SpanningTree tree, ImposedSet imposed, std::vector<Step> history)
    : tree_(std::move(tree)), imposed_(std::move(imposed)), history_(std::move(history)) {}

ImpositionState ImpositionState::base(const Graph& g) {
    return ImpositionState(minimum_spanning_tree(g), ImposedSet(), {});
}

ImpositionState ImpositionState::impose(int edge_id) const {
    const Graph& g = tree_.graph();
    g.edge(edge_id);  // range check

    std::vector<int> imposed_ids = imposed_.ids();
    imposed_ids.push_back(edge_id);
    std::vector<Step> history = history_;

    if (tree_.contains(edge_id)) {
        history.push_back(Step{edge_id, std::nullopt});
        return ImpositionState(tree_, ImposedSet(g, std::move(imposed_ids)), std::move(history));
    }

    Replacement r = replacement(tree_, imposed_, edge_id);
    if (r.is_infinite()) {
        std::vector<int> cycle = tree_path(tree_, g.edge(edge_id).u, g.edge(edge_id).v);
        cycle.push_back(edge_id);
        std::sort(cycle.begin(), cycle.end());
        std::string listing;
        for (int id : cycle) {
            listing += (listing.empty() ? "#" : ", #") + std::to_string(id);
        }
        throw InfeasibleError("imposing edge #" + std::to_string(edge_id) +
                                  " closes a cycle of imposed edges: " + listing,
                              cycle);
    }

    std::vector<int> edges = tree_.edge_ids();
    edges.erase(std::find(edges.begin(), edges.end(), *r.replacement_edge));
    edges.push_back(edge_id);
    SpanningTree next(g, std::move(edges));
    assert(next.total_cost() == tree_.total_cost() + r.replacement_cost.value());

    history.push_back(Step{edge_id, r.replacement_edge});
    return ImpositionState(std::move(next), ImposedSet(g, std::move(imposed_ids)),
                           std::move(history));
}

ImpositionState impose_all(const Graph& g, std::span<const int> edge_ids) {
    ImpositionState state = ImpositionState::base(g);
    for (std::size_t step = 0; step < edge_ids.size(); ++step) {
        try {
            state = state.impose(edge_ids[step]);
        } catch (const InfeasibleError& e) {
            throw InfeasibleError("step " + std::to_string(step) + ": " + e.what(),
                                  e.cycle_edges());
        }
    }
    return state;
}

}  // namespace imst
