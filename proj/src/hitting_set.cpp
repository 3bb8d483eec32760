#include "divsol/hitting_set.hpp"

#include <algorithm>

namespace divsol {

namespace {

// Index of the first family set disjoint from the partial solution, or -1.
int first_unhit(const HypergraphInstance& inst, const std::vector<ElementId>& partial) {
    for (int i = 0; i < static_cast<int>(inst.family.size()); ++i) {
        bool hit = false;
        for (ElementId v : inst.family[i].elems)
            if (std::binary_search(partial.begin(), partial.end(), v)) {
                hit = true;
                break;
            }
        if (!hit) return i;
    }
    return -1;
}

void branch(const HypergraphInstance& inst, int k, std::vector<ElementId>& partial,
            std::vector<Solution>& out) {
    int idx = first_unhit(inst, partial);
    if (idx < 0) {
        out.emplace_back(partial);
        return;
    }
    if (static_cast<int>(partial.size()) >= k) return;
    for (ElementId v : inst.family[idx].elems) {
        auto pos = std::lower_bound(partial.begin(), partial.end(), v);
        partial.insert(pos, v);
        branch(inst, k, partial, out);
        partial.erase(std::find(partial.begin(), partial.end(), v));
    }
}

}  // namespace

MinimalSolutionCatalog enumerate_minimal_hitting_sets(const HypergraphInstance& inst, int k) {
    if (k < 0) throw std::invalid_argument("budget k must be nonnegative");
    for (const Solution& f : inst.family)
        if (f.empty()) throw std::invalid_argument("family contains an empty set");

    MinimalSolutionCatalog catalog;
    catalog.k = k;
    catalog.d = inst.d;

    std::vector<Solution> raw;
    std::vector<ElementId> partial;
    branch(inst, k, partial, raw);

    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    // Keep only inclusion-minimal sets: every non-minimal candidate strictly
    // contains some minimal hitting set of size <= k, which the branching also
    // emitted.
    for (const Solution& s : raw) {
        bool minimal = true;
        for (const Solution& other : raw)
            if (other.size() < s.size() && other.is_subset_of(s)) {
                minimal = false;
                break;
            }
        if (minimal) catalog.sets.push_back(s);
    }
    return catalog;
}

}  // namespace divsol
