#include "imst/bound.hpp"

#include "imst/tree_analysis.hpp"

namespace imst {

BoundReport lower_bound(const Graph& g, const ImposedSet& imposed, bool compute_exact) {
    SpanningTree base = minimum_spanning_tree(g);

    // Validates feasibility (throws on an imposed cycle) and provides the
    // exact constrained optimum in the same pass.
    SpanningTree exact = constrained_mst(g, imposed);

    BoundReport report;
    report.base_cost = base.total_cost();
    report.lower_bound = ExtCost(base.total_cost());

    ImposedSet nothing;
    for (int id : imposed.ids()) {
        BoundContribution c{id, std::nullopt, ExtCost(0)};
        if (!base.contains(id)) {
            Replacement r = replacement(base, nothing, id);
            c.replacement_edge = r.replacement_edge;
            c.replacement_cost = r.replacement_cost;
        }
        report.lower_bound += c.replacement_cost;
        report.contributions.push_back(c);
    }

    if (compute_exact) {
        report.exact_cost = exact.total_cost();
        if (report.lower_bound.is_finite()) {
            report.gap = *report.exact_cost - report.lower_bound.value();
        }
    }
    return report;
}

}  // namespace imst
