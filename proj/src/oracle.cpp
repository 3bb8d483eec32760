#include "divsol/oracle.hpp"

#include <algorithm>
#include <string>

namespace divsol {

namespace {

long long pow_capped(long long base, int exp, long long cap) {
    long long result = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && result > cap / base) return cap + 1;
        result *= base;
    }
    return result;
}

long long choose_capped(int n, int r, long long cap) {
    long long result = 1;
    for (int i = 1; i <= r; ++i) {
        result = result * (n - r + i) / i;  // exact: partial products are binomials
        if (result > cap) return cap + 1;
    }
    return result;
}

// All element subsets of [1, n] of size <= k, by size then lexicographically,
// kept when pred accepts them.
template <typename Pred>
std::vector<Solution> filtered_subsets(int n, int k, Pred&& pred) {
    std::vector<Solution> out;
    std::vector<ElementId> combo;
    for (int size = 0; size <= std::min(n, k); ++size) {
        combo.assign(static_cast<std::size_t>(size), 0);
        for (int i = 0; i < size; ++i) combo[i] = i + 1;
        while (true) {
            Solution s(combo);
            if (pred(s)) out.push_back(std::move(s));
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && combo[i] == n - (size - 1 - i)) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return out;
}

void check_universe(int n, const OracleCaps& caps) {
    if (n > caps.max_universe)
        throw EnumerationCapExceeded("universe of size " + std::to_string(n) +
                                     " exceeds the enumeration cap " +
                                     std::to_string(caps.max_universe));
}

}  // namespace

FullSolutionCatalog enumerate_all_hitting_sets(const HypergraphInstance& inst, int k,
                                               const OracleCaps& caps) {
    check_universe(inst.n, caps);
    FullSolutionCatalog cat;
    cat.k = k;
    cat.sets = filtered_subsets(inst.n, k, [&](const Solution& s) { return inst.hits_all(s); });
    return cat;
}

FullSolutionCatalog enumerate_all_fvs(const SimpleGraph& g, int k, const OracleCaps& caps) {
    check_universe(g.n, caps);
    FullSolutionCatalog cat;
    cat.k = k;
    cat.sets = filtered_subsets(g.n, k, [&](const Solution& s) { return is_fvs(g, s); });
    return cat;
}

BestTuple brute_force_best_tuple(const FullSolutionCatalog& catalog, int r, Measure measure,
                                 const OracleCaps& caps) {
    if (r < 1) throw std::invalid_argument("tuple length r must be positive");
    if (measure == Measure::min && r < 2)
        throw std::invalid_argument("div_min needs at least two solutions");
    BestTuple best;
    if (catalog.empty()) return best;
    const int m = catalog.size();

    if (measure == Measure::total) {
        if (pow_capped(m, r, caps.max_tuples) > caps.max_tuples)
            throw EnumerationCapExceeded("tuple count exceeds the oracle cap");
        std::vector<int> idx(static_cast<std::size_t>(r), 0);
        SolutionTuple t;
        t.k = catalog.k;
        t.sets.resize(static_cast<std::size_t>(r));
        while (true) {
            for (int i = 0; i < r; ++i) t.sets[i] = catalog.sets[idx[i]];
            int d = r >= 2 ? div_total(t) : 0;
            if (!best.feasible || d > best.diversity) {
                best.feasible = true;
                best.diversity = d;
                best.tuple = t;
            }
            int i = r - 1;
            while (i >= 0 && idx[i] == m - 1) idx[i--] = 0;
            if (i < 0) break;
            ++idx[i];
        }
        return best;
    }

    if (m < r) {
        // Fewer distinct solutions than slots: duplicates are forced and the
        // minimum distance is zero.
        SolutionTuple t;
        t.k = catalog.k;
        for (int i = 0; i < r; ++i) t.sets.push_back(catalog.sets[std::min(i, m - 1)]);
        best.feasible = true;
        best.diversity = 0;
        best.tuple = std::move(t);
        return best;
    }

    if (choose_capped(m, r, caps.max_tuples) > caps.max_tuples)
        throw EnumerationCapExceeded("tuple count exceeds the oracle cap");
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[i] = i;
    SolutionTuple t;
    t.k = catalog.k;
    t.sets.resize(static_cast<std::size_t>(r));
    while (true) {
        for (int i = 0; i < r; ++i) t.sets[i] = catalog.sets[idx[i]];
        int d = div_min(t);
        if (!best.feasible || d > best.diversity) {
            best.feasible = true;
            best.diversity = d;
            best.tuple = t;
        }
        int i = r - 1;
        while (i >= 0 && idx[i] == m - (r - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return best;
}

namespace {

// All T ⊇ base with |T| <= k over [1, n].
std::vector<Solution> supersets_within_budget(int n, const Solution& base, int k) {
    std::vector<ElementId> pool;
    for (int v = 1; v <= n; ++v)
        if (!base.contains(v)) pool.push_back(v);
    int room = k - base.size();
    std::vector<Solution> out;
    auto extras = filtered_subsets(static_cast<int>(pool.size()), room,
                                   [](const Solution&) { return true; });
    for (const Solution& e : extras) {
        std::vector<ElementId> elems = base.elems;
        for (ElementId i : e.elems) elems.push_back(pool[i - 1]);
        out.emplace_back(std::move(elems));
    }
    return out;
}

int best_total_over_choices(const std::vector<std::vector<Solution>>& choices, int k,
                            const OracleCaps& caps) {
    long long count = 1;
    for (const auto& c : choices) {
        count *= static_cast<long long>(c.size());
        if (count > caps.max_tuples)
            throw EnumerationCapExceeded("augmentation count exceeds the oracle cap");
    }
    const int r = static_cast<int>(choices.size());
    std::vector<std::size_t> idx(choices.size(), 0);
    SolutionTuple t;
    t.k = k;
    t.sets.resize(choices.size());
    int best = -1;
    while (true) {
        for (int i = 0; i < r; ++i) t.sets[i] = choices[i][idx[i]];
        best = std::max(best, div_total(t));
        int i = r - 1;
        while (i >= 0 && idx[i] + 1 == choices[i].size()) idx[i--] = 0;
        if (i < 0) break;
        ++idx[i];
    }
    return best;
}

}  // namespace

int brute_force_augment_bases(int n, const std::vector<Solution>& bases, int k,
                              const OracleCaps& caps) {
    std::vector<std::vector<Solution>> choices;
    for (const Solution& base : bases) {
        if (base.size() > k) throw std::invalid_argument("base set larger than budget k");
        choices.push_back(supersets_within_budget(n, base, k));
    }
    return best_total_over_choices(choices, k, caps);
}

int brute_force_augment_classes(int n, const std::vector<SolutionClass>& classes, int k,
                                const OracleCaps& caps) {
    std::vector<std::vector<Solution>> choices;
    for (const SolutionClass& c : classes) {
        if (c.core.size() > k) throw std::invalid_argument("class core larger than budget k");
        std::vector<Solution> mine;
        for (const Solution& member : sol_members(c))
            for (Solution& t : supersets_within_budget(n, member, k)) mine.push_back(std::move(t));
        std::sort(mine.begin(), mine.end());
        mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
        choices.push_back(std::move(mine));
    }
    return best_total_over_choices(choices, k, caps);
}

}  // namespace divsol
