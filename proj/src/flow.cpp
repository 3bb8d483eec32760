#include "divsol/flow.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <queue>
#include <stdexcept>

namespace divsol {

std::vector<int> cost_levels(int r) {
    std::vector<int> g(static_cast<std::size_t>(r));
    for (int y = 1; y <= r; ++y) g[y - 1] = r - 2 * y + 1;
    return g;
}

int FlowNetwork::add_node(std::string name) {
    node_names.push_back(std::move(name));
    out_arcs.emplace_back();
    in_arcs.emplace_back();
    return node_count() - 1;
}

int FlowNetwork::add_arc(int tail, int head, int capacity, int cost, bool final_layer) {
    Arc a;
    a.tail = tail;
    a.head = head;
    a.capacity = capacity;
    a.cost = cost;
    a.final_layer = final_layer;
    arcs.push_back(a);
    int id = static_cast<int>(arcs.size()) - 1;
    if (!final_layer) {
        out_arcs[tail].push_back(id);
        in_arcs[head].push_back(id);
    }
    return id;
}

int FlowNetwork::value() const {
    int v = 0;
    for (const Arc& a : arcs)
        if (a.tail == source) v += a.flow;
    return v;
}

int FlowNetwork::total_cost() const {
    int c = 0;
    for (const Arc& a : arcs) c += a.flow * a.cost;
    return c;
}

void FlowNetwork::validate() const {
    std::vector<int> balance(node_names.size(), 0);
    for (const Arc& a : arcs) {
        if (a.flow < 0 || a.flow > a.capacity)
            throw std::logic_error("arc flow outside [0, capacity]");
        if (a.frozen && a.flow != a.capacity) throw std::logic_error("frozen arc not saturated");
        balance[a.tail] -= a.flow;
        balance[a.head] += a.flow;
    }
    for (int v = 0; v < node_count(); ++v)
        if (v != source && v != sink && balance[v] != 0)
            throw std::logic_error("flow conservation violated at " + node_names[v]);
}

SolutionTuple FlowNetwork::decode() const {
    SolutionTuple t;
    t.k = k;
    for (int i = 0; i < r; ++i) {
        std::vector<ElementId> elems;
        for (int j = 1; j <= n; ++j) {
            int a = element_arcs[i][j];
            if (a >= 0 && arcs[a].flow == 1) elems.push_back(j);
        }
        t.sets.emplace_back(std::move(elems));
    }
    return t;
}

namespace {

struct ResidualSearch {
    std::vector<char> reached;
    std::vector<int> pred_arc;
    std::vector<char> pred_back;
};

// Breadth-first reachability in the residual graph over the non-final layers.
// Frozen arcs and final-layer arcs are never traversed backward; neighbors are
// expanded in ascending node id for reproducible paths.
ResidualSearch residual_bfs(const FlowNetwork& net, int start) {
    ResidualSearch rs;
    rs.reached.assign(net.node_count(), false);
    rs.pred_arc.assign(net.node_count(), -1);
    rs.pred_back.assign(net.node_count(), false);
    rs.reached[start] = true;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        std::vector<std::pair<int, std::pair<int, bool>>> next;  // (node, (arc, back))
        for (int id : net.out_arcs[u]) {
            const Arc& a = net.arcs[id];
            if (a.flow < a.capacity && !rs.reached[a.head]) next.push_back({a.head, {id, false}});
        }
        for (int id : net.in_arcs[u]) {
            const Arc& a = net.arcs[id];
            if (a.flow > 0 && !a.frozen && !rs.reached[a.tail])
                next.push_back({a.tail, {id, true}});
        }
        std::sort(next.begin(), next.end());
        for (const auto& [node, step] : next) {
            if (rs.reached[node]) continue;
            rs.reached[node] = true;
            rs.pred_arc[node] = step.first;
            rs.pred_back[node] = step.second;
            q.push(node);
        }
    }
    return rs;
}

// Pushes one unit from start to end_node along the BFS predecessors, then one
// unit through the given final arc.
void augment_unit(FlowNetwork& net, const ResidualSearch& rs, int start, int end_node,
                  int final_arc) {
    int node = end_node;
    while (node != start) {
        int id = rs.pred_arc[node];
        assert(id >= 0);
        Arc& a = net.arcs[id];
        if (rs.pred_back[node]) {
            a.flow -= 1;
            node = a.head;
        } else {
            a.flow += 1;
            node = a.tail;
        }
    }
    net.arcs[final_arc].flow += 1;
}

// Index of the highest-cost unsaturated arc in V_j's bundle, or -1.
int best_free_level(const FlowNetwork& net, int j) {
    for (std::size_t y = 0; y < net.final_arcs[j].size(); ++y)
        if (net.arcs[net.final_arcs[j][y]].flow == 0) return static_cast<int>(y);
    return -1;
}

void add_final_bundle(FlowNetwork& net, const std::vector<int>& levels) {
    net.final_arcs.assign(static_cast<std::size_t>(net.n) + 1, {});
    for (int j = 1; j <= net.n; ++j)
        for (int g : levels)
            net.final_arcs[j].push_back(net.add_arc(net.v_node[j], net.sink, 1, g, true));
}

}  // namespace

FlowNetwork build_network(int n, const std::vector<Solution>& bases, int k) {
    const int r = static_cast<int>(bases.size());
    FlowNetwork net;
    net.n = n;
    net.r = r;
    net.k = k;
    for (const Solution& s : bases) {
        if (s.size() > k) throw std::invalid_argument("base set larger than budget k");
        for (ElementId v : s.elems)
            if (v < 1 || v > n) throw std::invalid_argument("base element outside universe");
    }

    net.source = net.add_node("s");
    std::vector<int> t_node(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) t_node[i] = net.add_node("T" + std::to_string(i + 1));
    net.v_node.assign(static_cast<std::size_t>(n) + 1, -1);
    for (int j = 1; j <= n; ++j) net.v_node[j] = net.add_node("V" + std::to_string(j));
    net.sink = net.add_node("t");

    net.element_arcs.assign(static_cast<std::size_t>(r),
                            std::vector<int>(static_cast<std::size_t>(n) + 1, -1));
    for (int i = 0; i < r; ++i) {
        int s_arc = net.add_arc(net.source, t_node[i], k, 0);
        net.arcs[s_arc].flow = bases[i].size();
        for (int j = 1; j <= n; ++j) {
            int id = net.add_arc(t_node[i], net.v_node[j], 1, 0);
            net.element_arcs[i][j] = id;
            if (bases[i].contains(j)) {
                net.arcs[id].flow = 1;
                net.arcs[id].frozen = true;
            }
        }
    }
    add_final_bundle(net, cost_levels(r));

    // Route each frozen unit through the highest-cost free arc of its bundle.
    for (int j = 1; j <= n; ++j) {
        int units = 0;
        for (int i = 0; i < r; ++i)
            if (bases[i].contains(j)) ++units;
        for (int y = 0; y < units; ++y) net.arcs[net.final_arcs[j][y]].flow = 1;
    }
    net.validate();
    return net;
}

FlowNetwork build_class_network(int n, const std::vector<SolutionClass>& classes, int k) {
    const int r = static_cast<int>(classes.size());
    FlowNetwork net;
    net.n = n;
    net.r = r;
    net.k = k;
    for (const SolutionClass& c : classes) {
        if (c.core.size() > k) throw std::invalid_argument("class core larger than budget k");
        for (const auto& [v, lab] : c.labels)
            for (ElementId x : lab.elems)
                if (x < 1 || x > n) throw std::invalid_argument("label element outside universe");
    }

    net.source = net.add_node("s");
    std::vector<int> t_node(static_cast<std::size_t>(r));
    std::vector<std::vector<int>> required(static_cast<std::size_t>(r));  // s->L arc ids per class
    std::vector<std::vector<int>> u_node(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        const SolutionClass& c = classes[i];
        const std::string suffix = "@T" + std::to_string(i + 1);
        t_node[i] = net.add_node("T" + std::to_string(i + 1));
        u_node[i].assign(static_cast<std::size_t>(n) + 1, -1);
        std::vector<int> l_node(c.labels.size());
        for (std::size_t q = 0; q < c.labels.size(); ++q)
            l_node[q] = net.add_node("L" + std::to_string(q + 1) + suffix);
        for (std::size_t q = 0; q < c.labels.size(); ++q)
            for (ElementId j : c.labels[q].second.elems)
                u_node[i][j] = net.add_node("U" + std::to_string(j) + suffix);
        // Arcs are added after all structure nodes exist so ids stay grouped.
        for (std::size_t q = 0; q < c.labels.size(); ++q)
            required[i].push_back(net.add_arc(net.source, l_node[q], 1, 0));
        net.add_arc(net.source, t_node[i], k - c.label_count(), 0);
        for (std::size_t q = 0; q < c.labels.size(); ++q)
            for (ElementId j : c.labels[q].second.elems) {
                net.add_arc(l_node[q], u_node[i][j], 1, 0);
                net.add_arc(t_node[i], u_node[i][j], 1, 0);
            }
    }
    net.v_node.assign(static_cast<std::size_t>(n) + 1, -1);
    for (int j = 1; j <= n; ++j) net.v_node[j] = net.add_node("V" + std::to_string(j));
    net.sink = net.add_node("t");

    net.element_arcs.assign(static_cast<std::size_t>(r),
                            std::vector<int>(static_cast<std::size_t>(n) + 1, -1));
    for (int i = 0; i < r; ++i)
        for (int j = 1; j <= n; ++j) {
            if (u_node[i][j] >= 0)
                net.element_arcs[i][j] = net.add_arc(u_node[i][j], net.v_node[j], 1, 0);
            else
                net.element_arcs[i][j] = net.add_arc(t_node[i], net.v_node[j], 1, 0);
        }
    add_final_bundle(net, cost_levels(r));

    // Saturate each required arc in turn along the augmenting path whose final
    // arc has maximum residual cost, then freeze it.
    for (int i = 0; i < r; ++i)
        for (int req : required[i]) {
            // Freeze before searching so the unit cannot retreat into s.
            Arc& ra = net.arcs[req];
            ra.flow = 1;
            ra.frozen = true;
            ResidualSearch rs = residual_bfs(net, ra.head);
            int best_j = -1, best_level = -1;
            for (int j = 1; j <= n; ++j) {
                if (!rs.reached[net.v_node[j]]) continue;
                int level = best_free_level(net, j);
                if (level < 0) continue;
                if (best_j < 0 || level < best_level) {
                    best_j = j;
                    best_level = level;
                }
            }
            if (best_j < 0)
                throw std::runtime_error("inconsistent solution class: required unit cannot reach "
                                         "the final layer");
            augment_unit(net, rs, ra.head, net.v_node[best_j],
                         net.final_arcs[best_j][best_level]);
        }
    net.validate();
    return net;
}

SolutionTuple max_cost_augment(FlowNetwork& net, FlowStats* stats) {
    FlowStats st;
    const std::vector<int> levels = cost_levels(net.r);
    const int max_augmentations = net.k * net.r;
    std::vector<int> prev_final(net.arcs.size(), 0);
    for (std::size_t a = 0; a < net.arcs.size(); ++a)
        if (net.arcs[a].final_layer) prev_final[a] = net.arcs[a].flow;

    for (int y = 0; y < net.r && levels[y] > 0; ++y) {
        while (true) {
            ResidualSearch rs = residual_bfs(net, net.source);
            int target = -1;
            for (int j = 1; j <= net.n; ++j)
                if (rs.reached[net.v_node[j]] && net.arcs[net.final_arcs[j][y]].flow == 0) {
                    target = j;
                    break;
                }
            if (target < 0) break;
            augment_unit(net, rs, net.source, net.v_node[target], net.final_arcs[target][y]);
            ++st.augmentations;
            if (st.augmentations > max_augmentations)
                throw std::logic_error("augmentation count exceeded k*r");
            for (std::size_t a = 0; a < net.arcs.size(); ++a)
                if (net.arcs[a].final_layer) {
                    if (net.arcs[a].flow < prev_final[a]) st.final_monotone = false;
                    prev_final[a] = net.arcs[a].flow;
                }
        }
    }

    net.validate();
    if (!st.final_monotone) throw std::logic_error("final-layer flow decreased");
    SolutionTuple tuple = net.decode();
    st.value = net.value();
    st.cost = net.total_cost();
    if (st.cost != div_total(tuple) || st.cost != div_total_by_frequency(tuple, net.n))
        throw std::logic_error("flow cost does not match the diversity of the decoded tuple");
    if (stats) *stats = st;
    return tuple;
}

void dump_network(const FlowNetwork& net, std::ostream& out) {
    for (const Arc& a : net.arcs)
        out << net.node_names[a.tail] << ' ' << net.node_names[a.head] << ' ' << a.capacity << ' '
            << a.cost << ' ' << a.flow << ' ' << (a.frozen ? 1 : 0) << '\n';
}

}  // namespace divsol
