#pragma once

// Feedback vertex set machinery: an exact bounded search for one FVS, and the
// construction of solution classes (core set plus disjoint label sets) that
// together describe every feedback vertex set of size at most k.

#include "divsol/core.hpp"
#include "divsol/work_graph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace divsol {

// Core set S with one label set per core vertex; picking one element from
// each label set always yields a feedback vertex set, and a set is described
// by the class when it contains such a pick.
struct SolutionClass {
    Solution core;
    std::vector<std::pair<ElementId, Solution>> labels;  // keyed by core vertex, ascending

    const Solution* label_of(ElementId v) const;
    int label_count() const { return static_cast<int>(labels.size()); }

    auto operator<=>(const SolutionClass&) const = default;
};

bool class_describes(const SolutionClass& c, const Solution& s);

// All one-pick-per-label-set members, in odometer order over ascending keys.
std::vector<Solution> sol_members(const SolutionClass& c);

bool is_fvs(const SimpleGraph& g, const Solution& s);

// Some feedback vertex set of size <= k, or nullopt if none exists. Applies
// degree reductions exhaustively, then branches on every vertex of a shortest
// cycle with budget k - 1.
std::optional<Solution> find_fvs(const SimpleGraph& g, int k);

// Deepest leaf of the forest induced by {v : in_forest[v]}: each component is
// rooted at its lowest vertex, candidates are the vertices of maximum depth,
// and the lowest candidate id wins. Throws on an empty forest.
int deepest_leaf(const WorkGraph& g, const std::vector<char>& in_forest);

// One branch of the class construction. The work graph holds exactly B ∪ C;
// vertices moved into the core (A) are deleted immediately and their label
// frozen. C is the set of active vertices not marked in_b.
struct BranchState {
    WorkGraph graph;
    std::vector<char> in_b;        // indexed by vertex id
    std::vector<ElementId> core;   // A, in insertion order
    std::vector<Solution> labels;  // indexed by vertex id; labels[v] contains v
    int steps = 0;                 // branching moves taken on this path

    std::vector<char> c_mask() const;
    const std::vector<char>& b_mask() const { return in_b; }
};

// Exhaustively applies the two reduction rules: delete a C-vertex of degree
// <= 1; for an edge of G'[C] whose endpoints both have degree 2, contract the
// lower endpoint into the higher and merge its label. A self-loop on a
// C-vertex (possible only through contraction artifacts) moves it into the
// core.
void reduce(BranchState& st);

struct FvsClassOptions {
    int threads = 1;
};

struct FvsClassStats {
    int max_branch_steps = 0;
    long long emitted = 0;  // classes emitted before deduplication
};

// Classes of FVS solutions covering every feedback vertex set of size <= k:
// one branching process per subset of a seed FVS, branching on deepest leaves
// of G'[C]. Returns classes in canonical order, deduplicated; empty when the
// graph has no FVS of size <= k.
std::vector<SolutionClass> build_fvs_classes(const SimpleGraph& g, int k,
                                             const FvsClassOptions& opts = {},
                                             FvsClassStats* stats = nullptr);

}  // namespace divsol
