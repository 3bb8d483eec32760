#pragma once

// The four top-level algorithms: maximize div_total over minimal-solution or
// class tuples via the flow network, and maximize div_min by complete
// enumeration (small universe) or fresh-element padding (large universe).
// Every reported tuple is re-verified against the original instance.

#include "divsol/core.hpp"
#include "divsol/flow.hpp"
#include "divsol/fvs.hpp"
#include "divsol/hitting_set.hpp"

#include <optional>
#include <stdexcept>

namespace divsol {

struct DiverseQuery {
    ProblemKind problem = ProblemKind::hitting_set;
    Measure measure = Measure::total;
    int k = 0;
    int r = 1;
    std::optional<int> t;
};

struct DiverseResult {
    bool feasible = false;
    std::optional<SolutionTuple> tuple;
    std::optional<int> diversity;
    std::optional<bool> meets_target;
};

struct SolveOptions {
    int threads = 1;
    long long tuple_budget = 10'000'000;
    // When set, tuple scans stop at the first tuple whose diversity reaches
    // this value; the reported tuple may then be suboptimal. Off by default
    // so the optimum is reported.
    std::optional<int> early_exit_target;
};

// Thrown instead of running an unbounded search when the number of candidate
// tuples exceeds SolveOptions::tuple_budget.
struct TupleBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

DiverseResult solve_diverse_hitting_set(const HypergraphInstance& inst, int k, int r,
                                        const SolveOptions& opts = {});
DiverseResult solve_diverse_fvs(const SimpleGraph& g, int k, int r, const SolveOptions& opts = {});

// Extra detail from the min-diversity solvers: whether the fresh-element
// padding branch (n >= k*r) ran and, if so, the per-solution base sets the
// padding extended (the pairwise identity
// d_H(T_i, T_j) = d_H(S_i, S_j) + (k - |S_i|) + (k - |S_j|) holds).
struct MinSolveDetail {
    DiverseResult result;
    bool padding_branch = false;
    std::vector<Solution> bases;
};

MinSolveDetail solve_min_diverse_hitting_set_detail(const HypergraphInstance& inst, int k, int r,
                                                    const SolveOptions& opts = {});
MinSolveDetail solve_min_diverse_fvs_detail(const SimpleGraph& g, int k, int r,
                                            const SolveOptions& opts = {});

DiverseResult solve_min_diverse_hitting_set(const HypergraphInstance& inst, int k, int r,
                                            const SolveOptions& opts = {});
DiverseResult solve_min_diverse_fvs(const SimpleGraph& g, int k, int r,
                                    const SolveOptions& opts = {});

DiverseResult check_target(DiverseResult res, std::optional<int> t);

// Dispatch by problem and measure; vertex cover is routed through the d = 2
// hitting-set encoding. Exactly one of inst / g must match the problem kind.
DiverseResult solve_query(const DiverseQuery& q, const HypergraphInstance* inst,
                          const SimpleGraph* g, const SolveOptions& opts = {});

}  // namespace divsol
