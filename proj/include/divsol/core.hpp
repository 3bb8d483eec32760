#pragma once

// Shared data model: element sets in canonical form, hypergraph and graph
// instances, solution tuples, and the two diversity measures.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace divsol {

// 1-based element / vertex identifier.
using ElementId = int;

enum class ProblemKind { hitting_set, vertex_cover, fvs };
enum class Measure { total, min };

// Canonical element set: strictly increasing ids.
struct Solution {
    std::vector<ElementId> elems;

    Solution() = default;
    explicit Solution(std::vector<ElementId> raw);

    int size() const { return static_cast<int>(elems.size()); }
    bool empty() const { return elems.empty(); }
    bool contains(ElementId v) const;
    bool is_subset_of(const Solution& other) const;

    auto operator<=>(const Solution&) const = default;
};

// Ordered r-tuple of solutions, repetition allowed, each bounded by k.
struct SolutionTuple {
    std::vector<Solution> sets;
    int k = 0;

    SolutionTuple() = default;
    SolutionTuple(std::vector<Solution> s, int budget) : sets(std::move(s)), k(budget) {}

    int r() const { return static_cast<int>(sets.size()); }
};

// Universe [1, n] plus a family of element sets of size <= d.
struct HypergraphInstance {
    int n = 0;
    std::vector<Solution> family;  // canonical order, no duplicates
    int d = 0;

    // Validates and canonicalizes; throws std::invalid_argument on an empty
    // set, an element outside [1, n], or a set larger than d.
    static HypergraphInstance make(int n, std::vector<std::vector<ElementId>> sets, int d);

    bool hits_all(const Solution& s) const;
};

// Undirected simple graph on vertices [1, n].
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<ElementId, ElementId>> edges;  // u < v, sorted, unique

    // Validates and canonicalizes; duplicate edges are collapsed (the count of
    // collapsed duplicates is reported through dropped_duplicates when given);
    // self-loops and out-of-range endpoints throw std::invalid_argument.
    static SimpleGraph make(int n, std::vector<std::pair<ElementId, ElementId>> raw,
                            int* dropped_duplicates = nullptr);
};

int hamming_distance(const Solution& a, const Solution& b);

// Sum of pairwise Hamming distances.
int div_total(const SolutionTuple& t);

// Same value computed from per-element occurrence counts y_v as
// sum_v y_v * (r - y_v); throws on elements outside [1, n].
int div_total_by_frequency(const SolutionTuple& t, int n);

// Minimum pairwise Hamming distance; undefined (throws) for r < 2.
int div_min(const SolutionTuple& t);

// Vertex Cover as hitting set with d = 2: one 2-element set per edge.
HypergraphInstance vc_as_hitting_set(const SimpleGraph& g);

}  // namespace divsol
