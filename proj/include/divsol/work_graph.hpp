#pragma once

// Mutable multigraph supporting the operations the feedback-vertex-set
// machinery needs: vertex deletion, degree-two contraction, and cycle /
// component queries restricted to a vertex subset. Parallel edges and
// self-loops are first-class; a self-loop contributes two to the degree.

#include "divsol/core.hpp"

#include <vector>

namespace divsol {

class WorkGraph {
public:
    WorkGraph() = default;
    explicit WorkGraph(int n);
    explicit WorkGraph(const SimpleGraph& g);

    int max_id() const { return n_; }
    bool active(int v) const { return active_[v]; }
    int active_count() const { return active_count_; }
    std::vector<int> vertices() const;  // active ids, ascending

    // Degree counting edge multiplicity; a self-loop counts twice.
    int degree(int v) const { return degree_[v]; }
    int multiplicity(int u, int v) const { return mult_[u][v]; }
    int self_loops(int v) const { return mult_[v][v]; }
    bool has_self_loop(int v) const { return mult_[v][v] > 0; }

    // Distinct neighbors (ascending), excluding v itself.
    std::vector<int> neighbors(int v) const;

    void add_edge(int u, int v);  // u == v adds a self-loop
    void remove_vertex(int v);

    // v must be active with degree exactly 2 and no self-loop; removes v and
    // joins its two edge endpoints (a self-loop when they coincide).
    void contract_degree_two(int v);

    bool acyclic() const;

    // Queries on the subgraph induced by active vertices with in_set[v] true.
    bool acyclic_within(const std::vector<char>& in_set) const;
    int component_count_within(const std::vector<char>& in_set) const;
    bool same_component_within(const std::vector<char>& in_set, int a, int b) const;

private:
    int n_ = 0;
    int active_count_ = 0;
    std::vector<char> active_;
    std::vector<std::vector<int>> mult_;  // multiplicity matrix; [v][v] = self-loop count
    std::vector<int> degree_;
};

}  // namespace divsol
