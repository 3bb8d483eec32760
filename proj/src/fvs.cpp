#include "divsol/fvs.hpp"

#include <algorithm>
#include <cassert>
#include <exception>
#include <queue>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace divsol {

const Solution* SolutionClass::label_of(ElementId v) const {
    for (const auto& [key, lab] : labels)
        if (key == v) return &lab;
    return nullptr;
}

bool class_describes(const SolutionClass& c, const Solution& s) {
    for (const auto& [key, lab] : c.labels) {
        bool hit = false;
        for (ElementId x : lab.elems)
            if (s.contains(x)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

std::vector<Solution> sol_members(const SolutionClass& c) {
    std::vector<Solution> out;
    std::vector<ElementId> pick(c.labels.size());
    std::vector<std::size_t> idx(c.labels.size(), 0);
    while (true) {
        for (std::size_t q = 0; q < c.labels.size(); ++q)
            pick[q] = c.labels[q].second.elems[idx[q]];
        out.emplace_back(pick);
        std::size_t q = c.labels.size();
        while (q > 0) {
            --q;
            if (++idx[q] < c.labels[q].second.elems.size()) break;
            idx[q] = 0;
            if (q == 0) return out;
        }
        if (c.labels.empty()) return out;
    }
}

bool is_fvs(const SimpleGraph& g, const Solution& s) {
    WorkGraph wg(g.n);
    for (auto [u, v] : g.edges)
        if (!s.contains(u) && !s.contains(v)) wg.add_edge(u, v);
    for (ElementId v : s.elems) wg.remove_vertex(v);
    return wg.acyclic();
}

namespace {

// Shortest cycle as a sorted vertex set. Two-cycles from parallel edges are
// checked first; longer cycles come from a BFS per start vertex, stopped at
// the first closing edge.
std::vector<int> shortest_cycle(const WorkGraph& g) {
    for (int u = 1; u <= g.max_id(); ++u) {
        if (!g.active(u)) continue;
        if (g.self_loops(u) > 0) return {u};
        for (int v = u + 1; v <= g.max_id(); ++v)
            if (g.active(v) && g.multiplicity(u, v) >= 2) return {u, v};
    }

    std::vector<int> best;
    for (int s = 1; s <= g.max_id(); ++s) {
        if (!g.active(s)) continue;
        std::vector<int> parent(static_cast<std::size_t>(g.max_id()) + 1, -2);
        std::queue<int> q;
        parent[s] = -1;
        q.push(s);
        bool closed = false;
        while (!q.empty() && !closed) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (parent[v] == -2) {
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    // Closing edge u-v: walk both ancestries, trim after the
                    // common prefix to get a simple cycle.
                    std::vector<int> cu, cv;
                    for (int w = u; w != -1; w = parent[w]) cu.push_back(w);
                    for (int w = v; w != -1; w = parent[w]) cv.push_back(w);
                    while (cu.size() > 1 && cv.size() > 1 &&
                           cu[cu.size() - 2] == cv[cv.size() - 2]) {
                        cu.pop_back();
                        cv.pop_back();
                    }
                    cv.pop_back();
                    cu.insert(cu.end(), cv.begin(), cv.end());
                    if (best.empty() || cu.size() < best.size()) best = cu;
                    closed = true;
                    break;
                }
            }
        }
    }
    std::sort(best.begin(), best.end());
    return best;
}

bool find_fvs_rec(WorkGraph g, int k, std::vector<ElementId>& chosen) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 1; v <= g.max_id(); ++v) {
            if (!g.active(v)) continue;
            if (g.has_self_loop(v)) {
                if (k == 0) return false;
                chosen.push_back(v);
                g.remove_vertex(v);
                --k;
            } else if (g.degree(v) <= 1) {
                g.remove_vertex(v);
            } else if (g.degree(v) == 2) {
                g.contract_degree_two(v);
            } else {
                continue;
            }
            changed = true;
            break;
        }
    }
    // Fully reduced: every remaining vertex has degree >= 3, so any nonempty
    // remainder contains a cycle.
    if (g.active_count() == 0) return true;
    if (k == 0) return false;

    std::vector<int> cycle = shortest_cycle(g);
    assert(!cycle.empty());
    for (int v : cycle) {
        WorkGraph h = g;
        h.remove_vertex(v);
        chosen.push_back(v);
        if (find_fvs_rec(std::move(h), k - 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Solution> find_fvs(const SimpleGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("budget k must be nonnegative");
    std::vector<ElementId> chosen;
    if (!find_fvs_rec(WorkGraph(g), k, chosen)) return std::nullopt;
    return Solution(std::move(chosen));
}

int deepest_leaf(const WorkGraph& g, const std::vector<char>& in_forest) {
    std::vector<int> depth(static_cast<std::size_t>(g.max_id()) + 1, -1);
    int best = -1;
    for (int root = 1; root <= g.max_id(); ++root) {
        if (!g.active(root) || !in_forest[root] || depth[root] >= 0) continue;
        std::vector<int> order;
        depth[root] = 0;
        std::queue<int> q;
        q.push(root);
        int max_depth = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            order.push_back(u);
            max_depth = std::max(max_depth, depth[u]);
            for (int v : g.neighbors(u))
                if (g.active(v) && in_forest[v] && depth[v] < 0) {
                    depth[v] = depth[u] + 1;
                    q.push(v);
                }
        }
        for (int u : order)
            if (depth[u] == max_depth && (best < 0 || u < best)) best = u;
    }
    if (best < 0) throw std::logic_error("deepest_leaf called on an empty forest");
    return best;
}

std::vector<char> BranchState::c_mask() const {
    std::vector<char> mask(static_cast<std::size_t>(graph.max_id()) + 1, false);
    for (int v = 1; v <= graph.max_id(); ++v)
        if (graph.active(v) && !in_b[v]) mask[v] = true;
    return mask;
}

namespace {

void move_to_core(BranchState& st, int v) {
    st.core.push_back(v);
    st.graph.remove_vertex(v);
}

}  // namespace

void reduce(BranchState& st) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 1; v <= st.graph.max_id() && !changed; ++v) {
            if (!st.graph.active(v) || st.in_b[v]) continue;
            if (st.graph.has_self_loop(v)) {
                // Contraction artifact: the loop is a cycle only v can hit.
                move_to_core(st, v);
                changed = true;
            } else if (st.graph.degree(v) <= 1) {
                st.graph.remove_vertex(v);
                changed = true;
            }
        }
        if (changed) continue;
        // R2: edge {u, v} in G'[C], both endpoints of degree 2.
        for (int u = 1; u <= st.graph.max_id() && !changed; ++u) {
            if (!st.graph.active(u) || st.in_b[u] || st.graph.degree(u) != 2) continue;
            for (int v = 1; v <= st.graph.max_id(); ++v) {
                if (v == u || !st.graph.active(v) || st.in_b[v]) continue;
                if (st.graph.multiplicity(u, v) == 0 || st.graph.degree(v) != 2) continue;
                st.labels[v] = Solution([&] {
                    std::vector<ElementId> merged = st.labels[v].elems;
                    merged.insert(merged.end(), st.labels[u].elems.begin(),
                                  st.labels[u].elems.end());
                    return merged;
                }());
                st.graph.contract_degree_two(u);
                changed = true;
                break;
            }
        }
    }
}

namespace {

int b_edge_count(const BranchState& st, int v) {
    int count = 0;
    for (int u = 1; u <= st.graph.max_id(); ++u)
        if (u != v && st.graph.active(u) && st.in_b[u]) count += st.graph.multiplicity(v, u);
    return count;
}

void emit_class(const BranchState& st, std::vector<SolutionClass>& out, FvsClassStats& stats) {
    SolutionClass c;
    c.core = Solution(st.core);
    for (ElementId v : c.core.elems) c.labels.emplace_back(v, st.labels[v]);
    out.push_back(std::move(c));
    ++stats.emitted;
}

void branch_step(BranchState& st, int k, std::vector<SolutionClass>& out, FvsClassStats& stats) {
    while (true) {
        stats.max_branch_steps = std::max(stats.max_branch_steps, st.steps);
        if (static_cast<int>(st.core.size()) > k) return;
        if (!st.graph.acyclic_within(st.b_mask())) return;
        if (st.graph.acyclic()) {
            emit_class(st, out, stats);
            return;
        }
        reduce(st);
        if (static_cast<int>(st.core.size()) > k) return;
        if (st.graph.acyclic()) {
            emit_class(st, out, stats);
            return;
        }

        std::vector<char> cm = st.c_mask();
        int v = deepest_leaf(st.graph, cm);

        if (b_edge_count(st, v) >= 2) {
            // Case 1: v has at least two edges into B.
            bool forced = false;
            std::vector<int> bnbrs;
            for (int u : st.graph.neighbors(v))
                if (st.in_b[u]) {
                    if (st.graph.multiplicity(v, u) >= 2) forced = true;  // 2-cycle through B
                    bnbrs.push_back(u);
                }
            if (!forced)
                for (std::size_t i = 0; i < bnbrs.size() && !forced; ++i)
                    for (std::size_t j = i + 1; j < bnbrs.size() && !forced; ++j)
                        if (st.graph.same_component_within(st.b_mask(), bnbrs[i], bnbrs[j]))
                            forced = true;  // a B-path joins two neighbors of v
            if (forced) {
                move_to_core(st, v);
                ++st.steps;
                continue;
            }
            BranchState child = st;
            move_to_core(child, v);
            ++child.steps;
            branch_step(child, k, out, stats);
            st.in_b[v] = true;
            ++st.steps;
            continue;
        }

        // Case 2: v is a leaf of G'[C] with exactly one edge into B, so its
        // degree is exactly 2; its C-neighbor p has degree >= 3. If p has no
        // B-neighbor, another leaf child w of p exists and joins the branch.
        int p = -1;
        for (int u : st.graph.neighbors(v))
            if (!st.in_b[u]) p = u;
        assert(p > 0 && st.graph.degree(v) == 2);

        std::vector<int> vars = {v, p};
        if (b_edge_count(st, p) == 0) {
            int w = -1;
            for (int u : st.graph.neighbors(p)) {
                if (u == v || st.in_b[u]) continue;
                int c_deg = 0;
                for (int x : st.graph.neighbors(u))
                    if (!st.in_b[x]) c_deg += st.graph.multiplicity(u, x);
                if (c_deg == 1) {
                    w = u;
                    break;
                }
            }
            assert(w > 0);
            vars.push_back(w);
        }

        for (int mask = 0; mask < (1 << vars.size()); ++mask) {
            std::vector<char> b_after = st.in_b;
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (!(mask & (1 << i))) b_after[vars[i]] = true;
            if (!st.graph.acyclic_within(b_after)) continue;  // allocation closes a B-cycle
            BranchState child = st;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                if (mask & (1 << i))
                    move_to_core(child, vars[i]);
                else
                    child.in_b[vars[i]] = true;
            }
            ++child.steps;
            branch_step(child, k, out, stats);
        }
        return;
    }
}

BranchState initial_state(const SimpleGraph& g, const std::vector<ElementId>& fvs,
                          unsigned long long mask) {
    BranchState st;
    st.graph = WorkGraph(g);
    st.in_b.assign(static_cast<std::size_t>(g.n) + 1, false);
    st.labels.resize(static_cast<std::size_t>(g.n) + 1);
    for (int v = 1; v <= g.n; ++v) st.labels[v] = Solution({v});
    for (std::size_t i = 0; i < fvs.size(); ++i) {
        if (mask & (1ULL << i))
            move_to_core(st, fvs[i]);
        else
            st.in_b[fvs[i]] = true;
    }
    return st;
}

}  // namespace

std::vector<SolutionClass> build_fvs_classes(const SimpleGraph& g, int k,
                                             const FvsClassOptions& opts, FvsClassStats* stats) {
    if (k < 0) throw std::invalid_argument("budget k must be nonnegative");
    std::optional<Solution> seed = find_fvs(g, k);
    if (!seed) return {};

    const std::vector<ElementId>& fvs = seed->elems;
    const unsigned long long subsets = 1ULL << fvs.size();

    std::vector<std::vector<SolutionClass>> per_subset(subsets);
    std::vector<FvsClassStats> per_stats(subsets);
    std::exception_ptr error;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, opts.threads)) \
    if (opts.threads > 1)
#endif
    for (long long mask = 0; mask < static_cast<long long>(subsets); ++mask) {
        try {
            BranchState st = initial_state(g, fvs, static_cast<unsigned long long>(mask));
            branch_step(st, k, per_subset[mask], per_stats[mask]);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);

    std::vector<SolutionClass> classes;
    for (auto& chunk : per_subset)
        for (auto& c : chunk) classes.push_back(std::move(c));
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

    if (stats) {
        *stats = {};
        for (const auto& s : per_stats) {
            stats->max_branch_steps = std::max(stats->max_branch_steps, s.max_branch_steps);
            stats->emitted += s.emitted;
        }
    }
    return classes;
}

}  // namespace divsol
