#pragma once

// Shared helpers for randomized tests: seeded instance generators and small
// brute-force references.

#include "divsol/core.hpp"
#include "divsol/oracle.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace testutil {

inline divsol::HypergraphInstance random_instance(std::mt19937& rng, int max_n = 7, int max_m = 10,
                                                  int max_d = 3) {
    std::uniform_int_distribution<int> n_dist(2, max_n);
    int n = n_dist(rng);
    std::uniform_int_distribution<int> m_dist(1, max_m);
    int m = m_dist(rng);
    std::uniform_int_distribution<int> d_dist(1, max_d);
    int d = d_dist(rng);
    std::uniform_int_distribution<int> size_dist(1, d);
    std::uniform_int_distribution<int> elem_dist(1, n);
    std::vector<std::vector<divsol::ElementId>> sets;
    for (int i = 0; i < m; ++i) {
        int size = size_dist(rng);
        std::vector<divsol::ElementId> set;
        for (int j = 0; j < size; ++j) set.push_back(elem_dist(rng));
        sets.push_back(std::move(set));  // duplicates collapse in canonical form
    }
    return divsol::HypergraphInstance::make(n, std::move(sets), d);
}

inline divsol::SimpleGraph random_graph(std::mt19937& rng, int n, double edge_prob) {
    std::bernoulli_distribution keep(edge_prob);
    std::vector<std::pair<divsol::ElementId, divsol::ElementId>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (keep(rng)) edges.emplace_back(u, v);
    return divsol::SimpleGraph::make(n, std::move(edges));
}

inline divsol::Solution random_subset(std::mt19937& rng, int n, int max_size) {
    std::uniform_int_distribution<int> size_dist(0, max_size);
    std::uniform_int_distribution<int> elem_dist(1, n);
    int size = size_dist(rng);
    std::vector<divsol::ElementId> elems;
    for (int i = 0; i < size; ++i) elems.push_back(elem_dist(rng));
    return divsol::Solution(std::move(elems));
}

// Inclusion-minimal hitting sets of size <= k by filtering the complete
// catalog; independent of the branching enumerator.
inline std::vector<divsol::Solution> brute_minimal_hitting_sets(
    const divsol::HypergraphInstance& inst, int k) {
    divsol::FullSolutionCatalog all = divsol::enumerate_all_hitting_sets(inst, k);
    std::vector<divsol::Solution> minimal;
    for (const divsol::Solution& s : all.sets) {
        bool ok = true;
        for (const divsol::Solution& other : all.sets)
            if (other.size() < s.size() && other.is_subset_of(s)) {
                ok = false;
                break;
            }
        if (ok) minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

// All labeled graphs on n vertices, as edge-subset bitmasks of K_n.
inline std::vector<divsol::SimpleGraph> all_graphs(int n) {
    std::vector<std::pair<divsol::ElementId, divsol::ElementId>> all_edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) all_edges.emplace_back(u, v);
    std::vector<divsol::SimpleGraph> out;
    for (unsigned long long mask = 0; mask < (1ULL << all_edges.size()); ++mask) {
        std::vector<std::pair<divsol::ElementId, divsol::ElementId>> edges;
        for (std::size_t i = 0; i < all_edges.size(); ++i)
            if (mask & (1ULL << i)) edges.push_back(all_edges[i]);
        out.push_back(divsol::SimpleGraph::make(n, std::move(edges)));
    }
    return out;
}

inline bool connected(const divsol::SimpleGraph& g) {
    if (g.n <= 1) return true;
    std::vector<int> stack = {1};
    std::vector<char> seen(static_cast<std::size_t>(g.n) + 1, false);
    seen[1] = true;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [a, b] : g.edges) {
            int other = a == u ? b : (b == u ? a : 0);
            if (other && !seen[other]) {
                seen[other] = true;
                ++count;
                stack.push_back(other);
            }
        }
    }
    return count == g.n;
}

}  // namespace testutil
