#include "divsol/core.hpp"

#include <algorithm>
#include <set>

namespace divsol {

Solution::Solution(std::vector<ElementId> raw) : elems(std::move(raw)) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
}

bool Solution::contains(ElementId v) const {
    return std::binary_search(elems.begin(), elems.end(), v);
}

bool Solution::is_subset_of(const Solution& other) const {
    return std::includes(other.elems.begin(), other.elems.end(), elems.begin(), elems.end());
}

HypergraphInstance HypergraphInstance::make(int n, std::vector<std::vector<ElementId>> sets, int d) {
    if (n < 0) throw std::invalid_argument("universe size must be nonnegative");
    if (d < 1) throw std::invalid_argument("maximum set size d must be positive");
    HypergraphInstance inst;
    inst.n = n;
    inst.d = d;
    for (auto& raw : sets) {
        Solution s(std::move(raw));
        if (s.empty()) throw std::invalid_argument("family contains an empty set");
        if (s.size() > d)
            throw std::invalid_argument("family set of size " + std::to_string(s.size()) +
                                        " exceeds d = " + std::to_string(d));
        for (ElementId v : s.elems)
            if (v < 1 || v > n)
                throw std::invalid_argument("element " + std::to_string(v) + " outside [1, " +
                                            std::to_string(n) + "]");
        inst.family.push_back(std::move(s));
    }
    std::sort(inst.family.begin(), inst.family.end());
    inst.family.erase(std::unique(inst.family.begin(), inst.family.end()), inst.family.end());
    return inst;
}

bool HypergraphInstance::hits_all(const Solution& s) const {
    for (const Solution& f : family) {
        bool hit = false;
        for (ElementId v : f.elems)
            if (s.contains(v)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

SimpleGraph SimpleGraph::make(int n, std::vector<std::pair<ElementId, ElementId>> raw,
                              int* dropped_duplicates) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    SimpleGraph g;
    g.n = n;
    for (auto& [u, v] : raw) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint outside [1, " + std::to_string(n) + "]");
        if (u > v) std::swap(u, v);
    }
    std::sort(raw.begin(), raw.end());
    auto last = std::unique(raw.begin(), raw.end());
    if (dropped_duplicates) *dropped_duplicates = static_cast<int>(raw.end() - last);
    raw.erase(last, raw.end());
    g.edges = std::move(raw);
    return g;
}

int hamming_distance(const Solution& a, const Solution& b) {
    // |a \ b| + |b \ a| by a single merge walk.
    std::size_t i = 0, j = 0;
    int dist = 0;
    while (i < a.elems.size() && j < b.elems.size()) {
        if (a.elems[i] == b.elems[j]) {
            ++i;
            ++j;
        } else if (a.elems[i] < b.elems[j]) {
            ++dist;
            ++i;
        } else {
            ++dist;
            ++j;
        }
    }
    dist += static_cast<int>((a.elems.size() - i) + (b.elems.size() - j));
    return dist;
}

int div_total(const SolutionTuple& t) {
    int sum = 0;
    for (int i = 0; i < t.r(); ++i)
        for (int j = i + 1; j < t.r(); ++j) sum += hamming_distance(t.sets[i], t.sets[j]);
    return sum;
}

int div_total_by_frequency(const SolutionTuple& t, int n) {
    std::vector<int> freq(static_cast<std::size_t>(n) + 1, 0);
    for (const Solution& s : t.sets)
        for (ElementId v : s.elems) {
            if (v < 1 || v > n)
                throw std::invalid_argument("element " + std::to_string(v) + " outside [1, " +
                                            std::to_string(n) + "]");
            ++freq[v];
        }
    int r = t.r();
    int sum = 0;
    for (int v = 1; v <= n; ++v) sum += freq[v] * (r - freq[v]);
    return sum;
}

int div_min(const SolutionTuple& t) {
    if (t.r() < 2) throw std::invalid_argument("div_min is undefined for fewer than two solutions");
    int best = -1;
    for (int i = 0; i < t.r(); ++i)
        for (int j = i + 1; j < t.r(); ++j) {
            int d = hamming_distance(t.sets[i], t.sets[j]);
            if (best < 0 || d < best) best = d;
        }
    return best;
}

HypergraphInstance vc_as_hitting_set(const SimpleGraph& g) {
    std::vector<std::vector<ElementId>> sets;
    sets.reserve(g.edges.size());
    for (auto [u, v] : g.edges) sets.push_back({u, v});
    return HypergraphInstance::make(g.n, std::move(sets), 2);
}

}  // namespace divsol
