#include "divsol/work_graph.hpp"

#include <cassert>
#include <numeric>

namespace divsol {

namespace {

// Tiny union-find over vertex ids.
struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n) + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // Returns false if x and y were already joined.
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[x] = y;
        return true;
    }
};

}  // namespace

WorkGraph::WorkGraph(int n)
    : n_(n),
      active_count_(n),
      active_(static_cast<std::size_t>(n) + 1, true),
      mult_(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)),
      degree_(static_cast<std::size_t>(n) + 1, 0) {
    if (n_ >= 0) active_[0] = false;
}

WorkGraph::WorkGraph(const SimpleGraph& g) : WorkGraph(g.n) {
    for (auto [u, v] : g.edges) add_edge(u, v);
}

std::vector<int> WorkGraph::vertices() const {
    std::vector<int> out;
    out.reserve(active_count_);
    for (int v = 1; v <= n_; ++v)
        if (active_[v]) out.push_back(v);
    return out;
}

std::vector<int> WorkGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 1; u <= n_; ++u)
        if (u != v && mult_[v][u] > 0) out.push_back(u);
    return out;
}

void WorkGraph::add_edge(int u, int v) {
    assert(active_[u] && active_[v]);
    if (u == v) {
        ++mult_[v][v];
        degree_[v] += 2;
        return;
    }
    ++mult_[u][v];
    ++mult_[v][u];
    ++degree_[u];
    ++degree_[v];
}

void WorkGraph::remove_vertex(int v) {
    assert(active_[v]);
    for (int u = 1; u <= n_; ++u) {
        if (u == v) continue;
        if (mult_[v][u] > 0) {
            degree_[u] -= mult_[v][u];
            mult_[u][v] = 0;
            mult_[v][u] = 0;
        }
    }
    mult_[v][v] = 0;
    degree_[v] = 0;
    active_[v] = false;
    --active_count_;
}

void WorkGraph::contract_degree_two(int v) {
    assert(active_[v] && degree_[v] == 2 && mult_[v][v] == 0);
    int a = -1, b = -1;
    for (int u = 1; u <= n_; ++u) {
        for (int c = 0; c < mult_[v][u]; ++c) {
            if (a < 0)
                a = u;
            else
                b = u;
        }
    }
    assert(a > 0 && b > 0);
    remove_vertex(v);
    add_edge(a, b);
}

bool WorkGraph::acyclic() const {
    std::vector<char> all(static_cast<std::size_t>(n_) + 1, true);
    return acyclic_within(all);
}

bool WorkGraph::acyclic_within(const std::vector<char>& in_set) const {
    DisjointSets ds(n_);
    for (int u = 1; u <= n_; ++u) {
        if (!active_[u] || !in_set[u]) continue;
        if (mult_[u][u] > 0) return false;
        for (int v = u + 1; v <= n_; ++v) {
            if (!active_[v] || !in_set[v]) continue;
            if (mult_[u][v] >= 2) return false;
            if (mult_[u][v] == 1 && !ds.unite(u, v)) return false;
        }
    }
    return true;
}

int WorkGraph::component_count_within(const std::vector<char>& in_set) const {
    DisjointSets ds(n_);
    int count = 0;
    for (int v = 1; v <= n_; ++v)
        if (active_[v] && in_set[v]) ++count;
    for (int u = 1; u <= n_; ++u) {
        if (!active_[u] || !in_set[u]) continue;
        for (int v = u + 1; v <= n_; ++v)
            if (active_[v] && in_set[v] && mult_[u][v] > 0 && ds.unite(u, v)) --count;
    }
    return count;
}

bool WorkGraph::same_component_within(const std::vector<char>& in_set, int a, int b) const {
    DisjointSets ds(n_);
    for (int u = 1; u <= n_; ++u) {
        if (!active_[u] || !in_set[u]) continue;
        for (int v = u + 1; v <= n_; ++v)
            if (active_[v] && in_set[v] && mult_[u][v] > 0) ds.unite(u, v);
    }
    return ds.find(a) == ds.find(b);
}

}  // namespace divsol
