#pragma once

// Deliberately naive reference implementations: complete enumeration of all
// solutions of size at most k, exhaustive best-tuple search, and exhaustive
// augmentation. Used as test oracles and as the small-universe enumeration
// backend of the min-diversity solvers.

#include "divsol/core.hpp"
#include "divsol/fvs.hpp"

#include <stdexcept>

namespace divsol {

struct EnumerationCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleCaps {
    int max_universe = 25;
    long long max_tuples = 10'000'000;
};

struct FullSolutionCatalog {
    std::vector<Solution> sets;  // ordered by size, then lexicographically
    int k = 0;

    bool empty() const { return sets.empty(); }
    int size() const { return static_cast<int>(sets.size()); }
};

FullSolutionCatalog enumerate_all_hitting_sets(const HypergraphInstance& inst, int k,
                                               const OracleCaps& caps = {});
FullSolutionCatalog enumerate_all_fvs(const SimpleGraph& g, int k, const OracleCaps& caps = {});

struct BestTuple {
    bool feasible = false;
    SolutionTuple tuple;
    int diversity = 0;
};

// Exact optimum over catalog tuples: all |catalog|^r ordered tuples with
// repetition for div_total; for div_min, all r-subsets when the catalog is
// large enough, otherwise a forced-duplicate tuple of diversity zero.
BestTuple brute_force_best_tuple(const FullSolutionCatalog& catalog, int r, Measure measure,
                                 const OracleCaps& caps = {});

// Exact div_total optimum over all augmentations T_i ⊇ S_i with |T_i| <= k.
int brute_force_augment_bases(int n, const std::vector<Solution>& bases, int k,
                              const OracleCaps& caps = {});

// Exact div_total optimum over all tuples where T_i contains one element per
// label set of its class, filled up to size k arbitrarily.
int brute_force_augment_classes(int n, const std::vector<SolutionClass>& classes, int k,
                                const OracleCaps& caps = {});

}  // namespace divsol
