#pragma once

// Bounded-depth branching enumeration of all inclusion-minimal hitting sets
// of size at most k. The catalog never exceeds d^k entries.

#include "divsol/core.hpp"

namespace divsol {

struct MinimalSolutionCatalog {
    std::vector<Solution> sets;  // canonical (lexicographic) order, deduplicated
    int k = 0;
    int d = 0;

    bool empty() const { return sets.empty(); }
    int size() const { return static_cast<int>(sets.size()); }
};

// Branches on the first family set not hit by the partial solution, one child
// per element, depth capped at k; a post-pass drops duplicates and
// non-minimal sets. An empty family yields the catalog {∅}.
MinimalSolutionCatalog enumerate_minimal_hitting_sets(const HypergraphInstance& inst, int k);

}  // namespace divsol
