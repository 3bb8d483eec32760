#pragma once

// Max-cost integral flow over a layered network whose only costs sit on the
// final layer: each element node V_j feeds the sink through r parallel unit
// arcs of strictly decreasing cost r - 2y + 1, modeling the concave objective
// y(r - y). Augmentation is level-greedy: saturate what is reachable at the
// highest remaining positive cost, then move down; final-layer flow never
// decreases and frozen arcs are never reversed.

#include "divsol/core.hpp"
#include "divsol/fvs.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace divsol {

struct Arc {
    int tail = 0;
    int head = 0;
    int capacity = 0;
    int cost = 0;
    int flow = 0;
    bool frozen = false;       // flow pinned at capacity, no residual reversal
    bool final_layer = false;  // V_j -> t bundle arc
};

// g_y = r - 2y + 1 for y = 1..r: strictly decreasing, summing to zero.
std::vector<int> cost_levels(int r);

struct FlowStats {
    int augmentations = 0;
    int value = 0;  // total flow out of the source
    int cost = 0;   // equals div_total of the decoded tuple
    bool final_monotone = true;
};

struct FlowNetwork {
    int n = 0, r = 0, k = 0;
    int source = 0;
    int sink = 0;
    std::vector<Arc> arcs;
    std::vector<std::string> node_names;
    std::vector<std::vector<int>> out_arcs;      // per node, non-final arcs leaving it
    std::vector<std::vector<int>> in_arcs;       // per node, non-final arcs entering it
    std::vector<std::vector<int>> final_arcs;    // [j] -> bundle arc ids, costs g_1..g_r
    std::vector<std::vector<int>> element_arcs;  // [i][j] -> arc carrying "j in T_i", or -1
    std::vector<int> v_node;                     // [j] -> node id of V_j

    int node_count() const { return static_cast<int>(node_names.size()); }
    int add_node(std::string name);
    int add_arc(int tail, int head, int capacity, int cost, bool final_layer = false);

    int value() const;       // flow out of the source
    int total_cost() const;  // sum of flow * cost over all arcs

    // Integrality bounds, frozen pins, and conservation at inner nodes;
    // throws std::logic_error on violation.
    void validate() const;

    SolutionTuple decode() const;
};

// Network for fixed base sets: s -> T_i of capacity k, complete unit middle
// layer T_i -> V_j with the base arcs frozen at one unit, and the initial
// flow routed through the cheapest-available... highest-cost free final arcs.
FlowNetwork build_network(int n, const std::vector<Solution>& bases, int k);

// Network for solution classes: per class, one required unit arc s -> L_q per
// label set, intermediate nodes U_j capping each element at one unit per
// structure, and s -> T_i of capacity k - b for the free picks. Required arcs
// are saturated along maximum-final-cost augmenting paths, then frozen.
FlowNetwork build_class_network(int n, const std::vector<SolutionClass>& classes, int k);

// Runs the level-greedy augmentation to completion and decodes the maximum
// div_total tuple. Checks the cost identity (arc costs == pairwise sum ==
// frequency form) on every solve.
SolutionTuple max_cost_augment(FlowNetwork& net, FlowStats* stats = nullptr);

// One arc per line: tail head capacity cost flow frozen.
void dump_network(const FlowNetwork& net, std::ostream& out);

}  // namespace divsol
