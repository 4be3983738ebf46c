#include "imst/verification.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "imst/bound.hpp"
#include "imst/errors.hpp"
#include "imst/ext_cost.hpp"
#include "imst/imposition.hpp"
#include "imst/tree_analysis.hpp"

namespace imst {

bool GraphVerification::all_passed() const { return total_violations() == 0; }

std::int64_t GraphVerification::total_checks() const {
    std::int64_t sum = 0;
    for (const auto& p : properties) {
        sum += p.checks;
    }
    return sum;
}

std::int64_t GraphVerification::total_violations() const {
    std::int64_t sum = 0;
    for (const auto& p : properties) {
        sum += p.violations;
    }
    return sum;
}

namespace {

std::string ids_str(const std::vector<int>& ids) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < ids.size(); ++i) {
        out << (i ? "," : "") << '#' << ids[i];
    }
    out << '}';
    return out.str();
}

template <typename Describe>
void record(PropertyResult& p, bool ok, Describe&& describe) {
    ++p.checks;
    if (!ok) {
        ++p.violations;
        if (p.first_violation.empty()) {
            p.first_violation = describe();
        }
    }
}

// Memoized oracle: every spanning tree, sorted by (cost, edge ids), so a
// brute-force constrained minimum is the first superset in the list.
// Edge-id bitmasks make the superset test one AND when ids fit 64 bits.
class OracleCache {
public:
    OracleCache(const Graph& g, const oracle::EnumerationBudget& budget) {
        oracle::for_each_spanning_tree(g, budget, [&](const std::vector<int>& ids) {
            std::int64_t cost = 0;
            for (int id : ids) {
                cost += g.edge(id).cost;
            }
            trees_.emplace_back(cost, ids);
        });
        std::sort(trees_.begin(), trees_.end());
        if (g.edge_count() <= 64) {
            masks_.reserve(trees_.size());
            for (const auto& [cost, ids] : trees_) {
                masks_.push_back(mask_of(ids));
            }
        }
    }

    const std::vector<std::pair<std::int64_t, std::vector<int>>>& trees() const { return trees_; }
    std::int64_t min_cost() const { return trees_.front().first; }

    // Cost of the cheapest tree containing every id in `required`
    // (ascending), or nullopt when none does.
    std::optional<std::int64_t> min_containing(const std::vector<int>& required) const {
        if (!masks_.empty()) {
            std::uint64_t need = mask_of(required);
            for (std::size_t i = 0; i < masks_.size(); ++i) {
                if ((masks_[i] & need) == need) {
                    return trees_[i].first;
                }
            }
            return std::nullopt;
        }
        for (const auto& [cost, ids] : trees_) {
            if (std::includes(ids.begin(), ids.end(), required.begin(), required.end())) {
                return cost;
            }
        }
        return std::nullopt;
    }

private:
    static std::uint64_t mask_of(const std::vector<int>& ids) {
        std::uint64_t mask = 0;
        for (int id : ids) {
            mask |= std::uint64_t{1} << id;
        }
        return mask;
    }

    std::vector<std::pair<std::int64_t, std::vector<int>>> trees_;
    std::vector<std::uint64_t> masks_;
};

}  // namespace

GraphVerification verify_graph(const Graph& g, const VerifyOptions& options) {
    GraphVerification out;
    out.properties.assign({PropertyResult{"optimality_conditions"},
                           PropertyResult{"replacement_tightness"},
                           PropertyResult{"replacement_monotonicity"},
                           PropertyResult{"bound_soundness"},
                           PropertyResult{"swap_contraction_agreement"},
                           PropertyResult{"infeasible_imposition"}});
    PropertyResult& optimality = out.properties[0];
    PropertyResult& tightness = out.properties[1];
    PropertyResult& monotonicity = out.properties[2];
    PropertyResult& soundness = out.properties[3];
    PropertyResult& agreement = out.properties[4];
    PropertyResult& infeasibility = out.properties[5];

    const OracleCache cache(g, options.budget);

    // -- optimality_conditions: on every spanning tree, path optimality,
    //    cut optimality and minimality must coincide.
    if (options.check_all_trees) {
        for (const auto& [cost, ids] : cache.trees()) {
            SpanningTree tree(g, ids);
            bool path_ok = check_path_optimality(tree);
            bool cut_ok = check_cut_optimality(tree);
            bool minimal = cost == cache.min_cost();
            record(optimality, path_ok == cut_ok && cut_ok == minimal, [&] {
                std::ostringstream s;
                s << "tree " << ids_str(ids) << " cost " << cost << ": path=" << path_ok
                  << " cut=" << cut_ok << " minimal=" << minimal;
                return s.str();
            });
        }
    }

    const ImpositionState origin = ImpositionState::base(g);
    const SpanningTree& base = origin.tree();
    const ImposedSet nothing;

    std::vector<int> base_nontree;
    std::map<int, ExtCost> base_replacement;
    for (const Edge& e : g.edges()) {
        if (!base.contains(e.id)) {
            base_nontree.push_back(e.id);
            base_replacement.emplace(e.id, replacement(base, nothing, e.id).replacement_cost);
        }
    }

    // -- replacement_tightness: imposing one nontree edge costs exactly
    //    base + replacement cost, and that is the constrained optimum.
    for (int e : base_nontree) {
        ExtCost r = base_replacement.at(e);
        std::int64_t swapped = origin.impose(e).tree().total_cost();
        std::optional<std::int64_t> oracle_cost = cache.min_containing({e});
        bool ok = r.is_finite() && oracle_cost.has_value() &&
                  swapped == base.total_cost() + r.value() && swapped == *oracle_cost;
        record(tightness, ok, [&] {
            std::ostringstream s;
            s << "edge #" << e << ": swap cost " << swapped << ", base+r "
              << (ExtCost(base.total_cost()) + r).str() << ", oracle "
              << (oracle_cost ? std::to_string(*oracle_cost) : "infeasible");
            return s.str();
        });
    }

    // -- replacement_monotonicity and infeasible_imposition, explored over
    //    every imposition sequence up to the configured length.
    std::function<void(const ImpositionState&, int)> explore = [&](const ImpositionState& state,
                                                                   int depth) {
        if (depth > 0) {
            for (int e : base_nontree) {
                if (state.tree().contains(e) || state.imposed().contains(e)) {
                    continue;  // swapped in or imposed: not a surviving nontree edge
                }
                ExtCost after = replacement(state.tree(), state.imposed(), e).replacement_cost;
                ExtCost before = base_replacement.at(e);
                record(monotonicity, after >= before, [&] {
                    std::ostringstream s;
                    s << "edge #" << e << " after imposing " << ids_str(state.imposed().ids())
                      << ": r-cost fell from " << before.str() << " to " << after.str();
                    return s.str();
                });
            }
        }
        for (const Edge& e : g.edges()) {
            if (state.tree().contains(e.id) || state.imposed().contains(e.id)) {
                continue;
            }
            Replacement r = replacement(state.tree(), state.imposed(), e.id);
            if (r.is_infinite()) {
                ++out.infinite_occurrences;
                bool threw = false;
                try {
                    state.impose(e.id);
                } catch (const InfeasibleError&) {
                    threw = true;
                }
                std::vector<int> closed = state.imposed().ids();
                closed.insert(std::lower_bound(closed.begin(), closed.end(), e.id), e.id);
                bool oracle_agrees = !cache.min_containing(closed).has_value();
                record(infeasibility, threw && oracle_agrees, [&] {
                    std::ostringstream s;
                    s << "edge #" << e.id << " with imposed " << ids_str(state.imposed().ids())
                      << ": infinite replacement, impose threw=" << threw
                      << ", oracle infeasible=" << oracle_agrees;
                    return s.str();
                });
            } else if (depth < options.max_sequence_len) {
                explore(state.impose(e.id), depth + 1);
            }
        }
    };
    explore(origin, 0);

    // -- bound_soundness and swap_contraction_agreement over imposed sets
    //    of base-nontree edges up to the configured size. Supersets of an
    //    infeasible set are infeasible, so those branches are cut.
    std::vector<int> subset;
    std::function<void(std::size_t)> subsets = [&](std::size_t from) {
        if (!subset.empty()) {
            std::optional<std::int64_t> oracle_cost = cache.min_containing(subset);
            if (!oracle_cost) {
                // No spanning tree contains the set: every route must
                // report infeasibility.
                ImposedSet imposed(g, subset);
                auto throws_infeasible = [&](auto&& fn) {
                    try {
                        fn();
                    } catch (const InfeasibleError&) {
                        return true;
                    }
                    return false;
                };
                bool cmst_throws = throws_infeasible([&] { constrained_mst(g, imposed); });
                bool swaps_throw = throws_infeasible([&] { impose_all(g, subset); });
                bool bound_throws = throws_infeasible([&] { lower_bound(g, imposed, false); });
                record(agreement, cmst_throws && swaps_throw && bound_throws, [&] {
                    std::ostringstream s;
                    s << "infeasible set " << ids_str(subset) << ": contraction threw="
                      << cmst_throws << ", swaps threw=" << swaps_throw
                      << ", bound threw=" << bound_throws;
                    return s.str();
                });
                return;
            }

            ImposedSet imposed(g, subset);
            BoundReport report = lower_bound(g, imposed, true);
            bool sound = report.lower_bound <= ExtCost(*oracle_cost);
            bool tight_single = subset.size() > 1 || (report.gap && *report.gap == 0);
            record(soundness, sound && tight_single, [&] {
                std::ostringstream s;
                s << "imposed " << ids_str(subset) << ": bound " << report.lower_bound.str()
                  << ", oracle " << *oracle_cost;
                return s.str();
            });
            if (report.gap && *report.gap > 0) {
                ++out.strict_gaps;
            }

            std::vector<int> reversed(subset.rbegin(), subset.rend());
            std::int64_t forward = impose_all(g, subset).tree().total_cost();
            std::int64_t backward = impose_all(g, reversed).tree().total_cost();
            std::int64_t contracted = constrained_mst(g, imposed).total_cost();
            bool agree =
                forward == backward && backward == contracted && contracted == *oracle_cost;
            record(agreement, agree, [&] {
                std::ostringstream s;
                s << "imposed " << ids_str(subset) << ": swaps " << forward << "/" << backward
                  << ", contraction " << contracted << ", oracle " << *oracle_cost;
                return s.str();
            });
        }
        if (subset.size() == static_cast<std::size_t>(options.max_subset_size)) {
            return;
        }
        for (std::size_t i = from; i < base_nontree.size(); ++i) {
            subset.push_back(base_nontree[i]);
            subsets(i + 1);
            subset.pop_back();
        }
    };
    subsets(0);

    return out;
}

}  // namespace imst
