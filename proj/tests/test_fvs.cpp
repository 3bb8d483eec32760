#include "divsol/fvs.hpp"

#include "divsol/oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>
#include <tuple>

using namespace divsol;

namespace {

SimpleGraph cycle(int n) {
    std::vector<std::pair<ElementId, ElementId>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(1, n);
    return SimpleGraph::make(n, std::move(edges));
}

SimpleGraph path(int n) {
    std::vector<std::pair<ElementId, ElementId>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return SimpleGraph::make(n, std::move(edges));
}

BranchState make_state(const SimpleGraph& g, const std::vector<int>& b) {
    BranchState st;
    st.graph = WorkGraph(g);
    st.in_b.assign(static_cast<std::size_t>(g.n) + 1, false);
    for (int v : b) st.in_b[v] = true;
    st.labels.resize(static_cast<std::size_t>(g.n) + 1);
    for (int v = 1; v <= g.n; ++v) st.labels[v] = Solution({v});
    return st;
}

// Observable fingerprint of a branch state, for idempotence checks.
auto snapshot(const BranchState& st) {
    std::vector<int> mults;
    for (int u = 1; u <= st.graph.max_id(); ++u)
        for (int v = u; v <= st.graph.max_id(); ++v) mults.push_back(st.graph.multiplicity(u, v));
    std::vector<Solution> labels = st.labels;
    return std::make_tuple(st.graph.vertices(), mults, st.in_b, st.core, labels);
}

void check_class_invariants(const SimpleGraph& g, const SolutionClass& c) {
    std::vector<char> seen(static_cast<std::size_t>(g.n) + 1, false);
    for (const auto& [key, lab] : c.labels) {
        CHECK(c.core.contains(key));
        CHECK(lab.contains(key));
        for (ElementId v : lab.elems) {
            CHECK_FALSE(seen[v]);  // label sets are pairwise disjoint
            seen[v] = true;
        }
    }
    for (const Solution& member : sol_members(c)) CHECK(is_fvs(g, member));
}

}  // namespace

TEST_CASE("find_fvs on small graphs") {
    auto fvs = find_fvs(cycle(3), 1);
    REQUIRE(fvs.has_value());
    CHECK(fvs->size() == 1);
    CHECK(is_fvs(cycle(3), *fvs));

    fvs = find_fvs(path(4), 0);
    REQUIRE(fvs.has_value());
    CHECK(fvs->empty());

    SimpleGraph two_triangles =
        SimpleGraph::make(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    CHECK_FALSE(find_fvs(two_triangles, 1).has_value());
    auto two = find_fvs(two_triangles, 2);
    REQUIRE(two.has_value());
    CHECK(is_fvs(two_triangles, *two));
}

TEST_CASE("find_fvs agrees with brute force about feasibility") {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 60; ++iter) {
        SimpleGraph g = testutil::random_graph(rng, 6, 0.5);
        for (int k = 0; k <= 2; ++k) {
            auto found = find_fvs(g, k);
            bool exists = !enumerate_all_fvs(g, k).empty();
            CHECK(found.has_value() == exists);
            if (found) {
                CHECK(found->size() <= k);
                CHECK(is_fvs(g, *found));
            }
        }
    }
}

TEST_CASE("deepest leaf selection") {
    WorkGraph isolated{SimpleGraph::make(1, {})};
    std::vector<char> all(2, true);
    CHECK(deepest_leaf(isolated, all) == 1);

    WorkGraph p3{path(3)};
    CHECK(deepest_leaf(p3, std::vector<char>(4, true)) == 3);

    WorkGraph star{SimpleGraph::make(4, {{1, 2}, {1, 3}, {1, 4}})};  // center 1
    CHECK(deepest_leaf(star, std::vector<char>(5, true)) == 2);
    WorkGraph star4{SimpleGraph::make(4, {{4, 1}, {4, 2}, {4, 3}})};  // center 4
    int leaf = deepest_leaf(star4, std::vector<char>(5, true));
    CHECK((leaf == 2 || leaf == 3 || leaf == 1));
    CHECK(leaf != 4);

    CHECK_THROWS_AS(deepest_leaf(p3, std::vector<char>(4, false)), std::logic_error);
}

TEST_CASE("reduction deletes pendant chains in C") {
    SimpleGraph g = SimpleGraph::make(4, {{1, 2}, {2, 3}, {3, 4}});
    BranchState st = make_state(g, {1});
    reduce(st);
    CHECK(st.graph.vertices() == std::vector<int>{1});
    CHECK(st.core.empty());
}

TEST_CASE("reduction contracts adjacent degree-two C-vertices and merges labels") {
    SimpleGraph g = SimpleGraph::make(4, {{1, 2}, {2, 3}, {3, 4}});
    BranchState st = make_state(g, {1, 4});
    reduce(st);
    CHECK(st.graph.vertices() == std::vector<int>{1, 3, 4});
    CHECK(st.labels[3].elems == std::vector<ElementId>{2, 3});
    CHECK(st.graph.multiplicity(1, 3) == 1);
    CHECK(st.graph.multiplicity(3, 4) == 1);
}

TEST_CASE("reduction is idempotent") {
    std::mt19937 rng(41);
    for (int iter = 0; iter < 40; ++iter) {
        SimpleGraph g = testutil::random_graph(rng, 6, 0.4);
        std::vector<int> b;
        for (int v = 1; v <= g.n; ++v)
            if (rng() % 3 == 0) b.push_back(v);
        BranchState st = make_state(g, b);
        reduce(st);
        auto before = snapshot(st);
        reduce(st);
        CHECK(snapshot(st) == before);
    }
}

TEST_CASE("class_describes checks one representative per label set") {
    SolutionClass c;
    c.core = Solution({5});
    c.labels = {{5, Solution({5, 7})}};
    CHECK(class_describes(c, Solution({7, 9})));
    c.labels = {{5, Solution({5})}};
    CHECK_FALSE(class_describes(c, Solution({9})));
    CHECK(class_describes(SolutionClass{}, Solution({1, 2})));
}

TEST_CASE("sol_members enumerates one pick per label set") {
    SolutionClass c;
    c.core = Solution({1, 3});
    c.labels = {{1, Solution({1, 2})}, {3, Solution({3})}};
    auto members = sol_members(c);
    REQUIRE(members.size() == 2);
    CHECK(members[0].elems == std::vector<ElementId>{1, 3});
    CHECK(members[1].elems == std::vector<ElementId>{2, 3});

    auto empty_members = sol_members(SolutionClass{});
    REQUIRE(empty_members.size() == 1);
    CHECK(empty_members[0].empty());
}

TEST_CASE("forests yield the empty class") {
    auto classes = build_fvs_classes(path(4), 2);
    bool has_empty = false;
    for (const auto& c : classes)
        if (c.core.empty()) has_empty = true;
    CHECK(has_empty);
}

TEST_CASE("small cycles: classes describe exactly the single-vertex solutions") {
    for (int n : {3, 4}) {
        SimpleGraph g = cycle(n);
        auto classes = build_fvs_classes(g, 1);
        REQUIRE(!classes.empty());
        for (int v = 0; v <= n; ++v) {
            Solution s = v == 0 ? Solution{} : Solution({v});
            bool described = false;
            for (const auto& c : classes)
                if (c.core.size() <= 1 && class_describes(c, s)) described = true;
            CHECK(described == is_fvs(g, s));
        }
    }
}

TEST_CASE("classes cover every FVS on all graphs with up to five vertices") {
    for (int n = 1; n <= 5; ++n) {
        for (const SimpleGraph& g : testutil::all_graphs(n)) {
            for (int k = 0; k <= 3; ++k) {
                FvsClassStats stats;
                auto classes = build_fvs_classes(g, k, {}, &stats);
                CHECK(static_cast<long long>(classes.size()) <= 1LL << (7 * k));
                CHECK(stats.max_branch_steps <= 2 * k);
                for (const auto& c : classes) {
                    CHECK(c.core.size() <= k);
                    check_class_invariants(g, c);
                }
                for (const Solution& fvs : enumerate_all_fvs(g, k).sets) {
                    bool described = false;
                    for (const auto& c : classes)
                        if (class_describes(c, fvs)) {
                            described = true;
                            break;
                        }
                    CHECK(described);
                }
            }
        }
    }
}

TEST_CASE("class construction is thread-invariant") {
    std::mt19937 rng(53);
    for (int iter = 0; iter < 10; ++iter) {
        SimpleGraph g = testutil::random_graph(rng, 7, 0.4);
        auto serial = build_fvs_classes(g, 2, FvsClassOptions{.threads = 1});
        auto parallel = build_fvs_classes(g, 2, FvsClassOptions{.threads = 2});
        CHECK(serial == parallel);
    }
}
