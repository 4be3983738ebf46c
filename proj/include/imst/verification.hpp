#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "imst/graph.hpp"
#include "imst/oracle.hpp"

namespace imst {

struct PropertyResult {
    std::string property;
    std::int64_t checks = 0;
    std::int64_t violations = 0;
    std::string first_violation;  // empty when clean
};

struct VerifyOptions {
    int max_sequence_len = 3;    // imposition sequences explored per graph
    int max_subset_size = 4;     // imposed-set sizes checked per graph
    bool check_all_trees = true; // optimality conditions on every spanning tree
    oracle::EnumerationBudget budget;
};

struct GraphVerification {
    std::vector<PropertyResult> properties;
    std::int64_t strict_gaps = 0;            // feasible sets where the bound is not tight
    std::int64_t infinite_occurrences = 0;   // infinite replacements encountered

    bool all_passed() const;
    std::int64_t total_checks() const;
    std::int64_t total_violations() const;
};

// Cross-checks the solver stack against the brute-force oracle on one
// graph. Properties, in order:
//   optimality_conditions      path/cut optimality hold exactly on minimum trees
//   replacement_tightness      single-edge imposition cost = base + replacement cost = brute optimum
//   replacement_monotonicity   replacement costs never shrink as edges get imposed
//   bound_soundness            lower bound never exceeds the constrained optimum
//   swap_contraction_agreement sequential swaps, contraction solver and oracle agree
//   infeasible_imposition      infinite replacements coincide with truly impossible impositions
// Throws BudgetError when the graph exceeds the enumeration budget.
GraphVerification verify_graph(const Graph& g, const VerifyOptions& options);

}  // namespace imst
