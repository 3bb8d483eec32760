#include "divsol/solvers.hpp"

#include "divsol/oracle.hpp"
#include "divsol/scan.hpp"

#include <algorithm>
#include <string>

namespace divsol {

namespace {

long long pow_or_budget_throw(long long base, int exp, long long budget, const char* what) {
    long long result = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && result > budget / base) result = budget + 1;
        else result *= base;
        if (result > budget)
            throw TupleBudgetExceeded(std::string(what) + ": " + std::to_string(base) + "^" +
                                      std::to_string(exp) + " tuples exceed the budget of " +
                                      std::to_string(budget));
    }
    return result;
}

// Digits of idx in base m, most significant first: the lexicographic rank of
// the tuple (i_1, ..., i_r).
std::vector<int> tuple_digits(long long idx, int m, int r) {
    std::vector<int> digits(static_cast<std::size_t>(r));
    for (int i = r - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(idx % m);
        idx /= m;
    }
    return digits;
}

void verify_budget(const SolutionTuple& t, int k) {
    for (const Solution& s : t.sets)
        if (s.size() > k) throw std::logic_error("reported solution exceeds budget k");
}

void verify_hitting_tuple(const HypergraphInstance& inst, const SolutionTuple& t, int k) {
    verify_budget(t, k);
    for (const Solution& s : t.sets)
        if (!inst.hits_all(s)) throw std::logic_error("reported set is not a hitting set");
}

void verify_fvs_tuple(const SimpleGraph& g, const SolutionTuple& t, int k) {
    verify_budget(t, k);
    for (const Solution& s : t.sets)
        if (!is_fvs(g, s)) throw std::logic_error("reported set is not a feedback vertex set");
}

}  // namespace

DiverseResult solve_diverse_hitting_set(const HypergraphInstance& inst, int k, int r,
                                        const SolveOptions& opts) {
    if (r < 1) throw std::invalid_argument("tuple length r must be positive");
    MinimalSolutionCatalog catalog = enumerate_minimal_hitting_sets(inst, k);
    if (catalog.empty()) return {};

    const int m = catalog.size();
    const long long count = pow_or_budget_throw(m, r, opts.tuple_budget, "diverse hitting set");

    auto bases_at = [&](long long idx) {
        std::vector<Solution> bases;
        for (int d : tuple_digits(idx, m, r)) bases.push_back(catalog.sets[d]);
        return bases;
    };
    ScanBest best = scan_best(
        count, opts.threads,
        [&](long long idx) {
            FlowNetwork net = build_network(inst.n, bases_at(idx), k);
            return div_total(max_cost_augment(net));
        },
        opts.early_exit_target);

    std::vector<Solution> bases = bases_at(best.index);
    FlowNetwork net = build_network(inst.n, bases, k);
    SolutionTuple tuple = max_cost_augment(net);
    verify_hitting_tuple(inst, tuple, k);
    for (int i = 0; i < r; ++i)
        if (!bases[i].is_subset_of(tuple.sets[i]))
            throw std::logic_error("augmented set lost its base");

    DiverseResult res;
    res.feasible = true;
    res.diversity = best.value;
    res.tuple = std::move(tuple);
    return res;
}

DiverseResult solve_diverse_fvs(const SimpleGraph& g, int k, int r, const SolveOptions& opts) {
    if (r < 1) throw std::invalid_argument("tuple length r must be positive");
    std::vector<SolutionClass> classes =
        build_fvs_classes(g, k, FvsClassOptions{.threads = opts.threads});
    if (classes.empty()) return {};

    const int m = static_cast<int>(classes.size());
    const long long count = pow_or_budget_throw(m, r, opts.tuple_budget, "diverse fvs");

    auto classes_at = [&](long long idx) {
        std::vector<SolutionClass> chosen;
        for (int d : tuple_digits(idx, m, r)) chosen.push_back(classes[d]);
        return chosen;
    };
    ScanBest best = scan_best(
        count, opts.threads,
        [&](long long idx) {
            FlowNetwork net = build_class_network(g.n, classes_at(idx), k);
            return div_total(max_cost_augment(net));
        },
        opts.early_exit_target);

    std::vector<SolutionClass> chosen = classes_at(best.index);
    FlowNetwork net = build_class_network(g.n, chosen, k);
    SolutionTuple tuple = max_cost_augment(net);
    verify_fvs_tuple(g, tuple, k);
    for (int i = 0; i < r; ++i)
        if (!class_describes(chosen[i], tuple.sets[i]))
            throw std::logic_error("augmented set is not described by its class");

    DiverseResult res;
    res.feasible = true;
    res.diversity = best.value;
    res.tuple = std::move(tuple);
    return res;
}

namespace {

// Ascending ids from [1, n] that appear in no base; takes `want` of them.
std::vector<ElementId> fresh_elements(int n, const std::vector<Solution>& bases, int want) {
    std::vector<char> used(static_cast<std::size_t>(n) + 1, false);
    for (const Solution& s : bases)
        for (ElementId v : s.elems) used[v] = true;
    std::vector<ElementId> fresh;
    for (int v = 1; v <= n && static_cast<int>(fresh.size()) < want; ++v)
        if (!used[v]) fresh.push_back(v);
    if (static_cast<int>(fresh.size()) < want)
        throw std::logic_error("not enough fresh elements for padding");
    return fresh;
}

// Pads each base with k - |S_i| fresh elements, distinct across the tuple.
SolutionTuple pad_bases(int n, const std::vector<Solution>& bases, int k) {
    int want = 0;
    for (const Solution& s : bases) want += k - s.size();
    std::vector<ElementId> pool = fresh_elements(n, bases, want);
    std::size_t next = 0;
    SolutionTuple t;
    t.k = k;
    for (const Solution& s : bases) {
        std::vector<ElementId> elems = s.elems;
        for (int add = 0; add < k - s.size(); ++add) elems.push_back(pool[next++]);
        t.sets.emplace_back(std::move(elems));
    }
    return t;
}

DiverseResult from_best_tuple(BestTuple best) {
    DiverseResult res;
    if (!best.feasible) return res;
    res.feasible = true;
    res.diversity = best.diversity;
    res.tuple = std::move(best.tuple);
    return res;
}

}  // namespace

MinSolveDetail solve_min_diverse_hitting_set_detail(const HypergraphInstance& inst, int k, int r,
                                                    const SolveOptions& opts) {
    if (r < 2) throw std::invalid_argument("div_min needs at least two solutions");
    MinSolveDetail detail;

    if (static_cast<long long>(inst.n) < static_cast<long long>(k) * r) {
        OracleCaps caps{.max_universe = inst.n, .max_tuples = opts.tuple_budget};
        FullSolutionCatalog catalog = enumerate_all_hitting_sets(inst, k, caps);
        detail.result = from_best_tuple(brute_force_best_tuple(catalog, r, Measure::min, caps));
        if (detail.result.feasible) verify_hitting_tuple(inst, *detail.result.tuple, k);
        return detail;
    }

    detail.padding_branch = true;
    MinimalSolutionCatalog catalog = enumerate_minimal_hitting_sets(inst, k);
    if (catalog.empty()) return detail;

    const int m = catalog.size();
    const long long count =
        pow_or_budget_throw(m, r, opts.tuple_budget, "min-diverse hitting set");

    // With fresh padding the pairwise distances are determined by the bases
    // alone, so tuples are scored without materializing the padded sets.
    auto padded_min = [&](long long idx) {
        std::vector<int> digits = tuple_digits(idx, m, r);
        int best = -1;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                const Solution& a = catalog.sets[digits[i]];
                const Solution& b = catalog.sets[digits[j]];
                int d = hamming_distance(a, b) + (k - a.size()) + (k - b.size());
                if (best < 0 || d < best) best = d;
            }
        return best;
    };
    ScanBest best = scan_best(count, opts.threads, padded_min, opts.early_exit_target);

    for (int d : tuple_digits(best.index, m, r)) detail.bases.push_back(catalog.sets[d]);
    SolutionTuple tuple = pad_bases(inst.n, detail.bases, k);
    if (div_min(tuple) != best.value)
        throw std::logic_error("padded tuple does not achieve the predicted div_min");
    verify_hitting_tuple(inst, tuple, k);

    detail.result.feasible = true;
    detail.result.diversity = best.value;
    detail.result.tuple = std::move(tuple);
    return detail;
}

namespace {

// One class tuple of the min-diverse FVS search: enumerate representatives of
// every label set smaller than k*r, pick greedily from the deferred (large)
// ones, and fill every set to size k with globally fresh elements.
struct ClassTupleExpansion {
    int n = 0, k = 0, r = 0;
    const std::vector<SolutionClass>* classes = nullptr;
    long long budget = 0;

    struct Outcome {
        int diversity = -1;
        std::vector<Solution> partial;  // the enumerated picks only
        SolutionTuple tuple;
    };

    Outcome run(const std::vector<int>& digits, bool keep_best) const {
        const int threshold = k * r;
        std::vector<std::pair<int, const Solution*>> small;     // (solution idx, label)
        std::vector<std::pair<int, const Solution*>> deferred;  // |label| >= k*r
        for (int i = 0; i < r; ++i)
            for (const auto& [v, lab] : (*classes)[digits[i]].labels)
                (lab.size() < threshold ? small : deferred).emplace_back(i, &lab);

        long long combos = 1;
        for (const auto& [i, lab] : small) {
            combos *= lab->size();
            if (combos > budget)
                throw TupleBudgetExceeded("label expansion exceeds the tuple budget");
        }

        Outcome best;
        std::vector<std::size_t> choice(small.size(), 0);
        while (true) {
            std::vector<std::vector<ElementId>> sets(static_cast<std::size_t>(r));
            for (std::size_t q = 0; q < small.size(); ++q)
                sets[small[q].first].push_back(small[q].second->elems[choice[q]]);
            std::vector<Solution> partial;
            for (int i = 0; i < r; ++i) partial.emplace_back(sets[i]);

            std::vector<char> used(static_cast<std::size_t>(n) + 1, false);
            for (const Solution& s : partial)
                for (ElementId v : s.elems) used[v] = true;
            auto take_fresh_from = [&](const std::vector<ElementId>& pool) {
                for (ElementId v : pool)
                    if (!used[v]) {
                        used[v] = true;
                        return v;
                    }
                throw std::logic_error("no fresh element available");
            };

            SolutionTuple t;
            t.k = k;
            std::vector<std::vector<ElementId>> full(sets);
            for (const auto& [i, lab] : deferred) full[i].push_back(take_fresh_from(lab->elems));
            std::vector<ElementId> universe(static_cast<std::size_t>(n));
            for (int v = 1; v <= n; ++v) universe[v - 1] = v;
            for (int i = 0; i < r; ++i)
                while (static_cast<int>(full[i].size()) < k)
                    full[i].push_back(take_fresh_from(universe));
            for (int i = 0; i < r; ++i) t.sets.emplace_back(full[i]);

            int d = div_min(t);
            if (d > best.diversity) {
                best.diversity = d;
                if (keep_best) {
                    best.partial = std::move(partial);
                    best.tuple = std::move(t);
                }
            }

            std::size_t q = small.size();
            bool done = true;
            while (q > 0) {
                --q;
                if (++choice[q] < small[q].second->elems.size()) {
                    done = false;
                    break;
                }
                choice[q] = 0;
            }
            if (done) break;
        }
        return best;
    }
};

}  // namespace

MinSolveDetail solve_min_diverse_fvs_detail(const SimpleGraph& g, int k, int r,
                                            const SolveOptions& opts) {
    if (r < 2) throw std::invalid_argument("div_min needs at least two solutions");
    MinSolveDetail detail;

    if (static_cast<long long>(g.n) < static_cast<long long>(k) * r) {
        OracleCaps caps{.max_universe = g.n, .max_tuples = opts.tuple_budget};
        FullSolutionCatalog catalog = enumerate_all_fvs(g, k, caps);
        detail.result = from_best_tuple(brute_force_best_tuple(catalog, r, Measure::min, caps));
        if (detail.result.feasible) verify_fvs_tuple(g, *detail.result.tuple, k);
        return detail;
    }

    detail.padding_branch = true;
    std::vector<SolutionClass> classes =
        build_fvs_classes(g, k, FvsClassOptions{.threads = opts.threads});
    if (classes.empty()) return detail;

    const int m = static_cast<int>(classes.size());
    const long long count = pow_or_budget_throw(m, r, opts.tuple_budget, "min-diverse fvs");

    ClassTupleExpansion expansion{g.n, k, r, &classes, opts.tuple_budget};
    ScanBest best = scan_best(
        count, opts.threads,
        [&](long long idx) { return expansion.run(tuple_digits(idx, m, r), false).diversity; },
        opts.early_exit_target);

    ClassTupleExpansion::Outcome outcome =
        expansion.run(tuple_digits(best.index, m, r), true);
    if (outcome.diversity != best.value)
        throw std::logic_error("expansion replay diverged from the scanned optimum");
    verify_fvs_tuple(g, outcome.tuple, k);

    detail.bases = std::move(outcome.partial);
    detail.result.feasible = true;
    detail.result.diversity = best.value;
    detail.result.tuple = std::move(outcome.tuple);
    return detail;
}

DiverseResult solve_min_diverse_hitting_set(const HypergraphInstance& inst, int k, int r,
                                            const SolveOptions& opts) {
    return solve_min_diverse_hitting_set_detail(inst, k, r, opts).result;
}

DiverseResult solve_min_diverse_fvs(const SimpleGraph& g, int k, int r,
                                    const SolveOptions& opts) {
    return solve_min_diverse_fvs_detail(g, k, r, opts).result;
}

DiverseResult check_target(DiverseResult res, std::optional<int> t) {
    if (t)
        res.meets_target = res.feasible && res.diversity && *res.diversity >= *t;
    else
        res.meets_target.reset();
    return res;
}

DiverseResult solve_query(const DiverseQuery& q, const HypergraphInstance* inst,
                          const SimpleGraph* g, const SolveOptions& opts) {
    if (q.r < 1) throw std::invalid_argument("tuple length r must be positive");
    if (q.k < 0) throw std::invalid_argument("budget k must be nonnegative");
    if (q.measure == Measure::min && q.r < 2)
        throw std::invalid_argument("measure 'min' needs r >= 2");

    HypergraphInstance converted;
    if (q.problem == ProblemKind::vertex_cover) {
        if (!g) throw std::invalid_argument("vertex cover expects a graph instance");
        converted = vc_as_hitting_set(*g);
        inst = &converted;
    }

    DiverseResult res;
    switch (q.problem) {
        case ProblemKind::hitting_set:
        case ProblemKind::vertex_cover:
            if (!inst) throw std::invalid_argument("hitting set expects a hypergraph instance");
            res = q.measure == Measure::total
                      ? solve_diverse_hitting_set(*inst, q.k, q.r, opts)
                      : solve_min_diverse_hitting_set(*inst, q.k, q.r, opts);
            break;
        case ProblemKind::fvs:
            if (!g) throw std::invalid_argument("fvs expects a graph instance");
            res = q.measure == Measure::total ? solve_diverse_fvs(*g, q.k, q.r, opts)
                                              : solve_min_diverse_fvs(*g, q.k, q.r, opts);
            break;
    }
    return check_target(std::move(res), q.t);
}

}  // namespace divsol
