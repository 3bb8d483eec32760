#include "divsol/core.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace divsol;

namespace {

SolutionTuple tuple_of(std::vector<std::vector<ElementId>> sets, int k) {
    SolutionTuple t;
    t.k = k;
    for (auto& s : sets) t.sets.emplace_back(std::move(s));
    return t;
}

}  // namespace

TEST_CASE("solutions canonicalize to strictly increasing sequences") {
    Solution s({3, 1, 2, 3, 1});
    CHECK(s.elems == std::vector<ElementId>{1, 2, 3});
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(4));
    CHECK(Solution({1, 2}).is_subset_of(s));
    CHECK_FALSE(s.is_subset_of(Solution({1, 2})));
}

TEST_CASE("hamming distance on element sets") {
    CHECK(hamming_distance(Solution{}, Solution{}) == 0);
    CHECK(hamming_distance(Solution({1, 2}), Solution({2, 3})) == 2);
    CHECK(hamming_distance(Solution({1, 2, 3}), Solution{}) == 3);
}

TEST_CASE("div_total sums pairwise distances") {
    CHECK(div_total(tuple_of({{1, 2}, {2, 3}, {1, 3}}, 2)) == 6);
    CHECK(div_total(tuple_of({{1, 2}}, 2)) == 0);
    CHECK(div_total(tuple_of({{1}, {1}}, 1)) == 0);
}

TEST_CASE("frequency form of div_total") {
    CHECK(div_total_by_frequency(tuple_of({{1, 2}, {2, 3}, {1, 3}}, 2), 3) == 6);
    CHECK(div_total_by_frequency(tuple_of({{1, 2}, {1, 2}, {1, 2}}, 2), 4) == 0);
    CHECK(div_total_by_frequency(tuple_of({{1}, {2}}, 1), 2) == 2);
    CHECK_THROWS_AS(div_total_by_frequency(tuple_of({{5}}, 1), 3), std::invalid_argument);
}

TEST_CASE("div_min is the smallest pairwise distance") {
    CHECK(div_min(tuple_of({{1, 2}, {3, 4}}, 2)) == 4);
    CHECK(div_min(tuple_of({{1, 2}, {2, 3}, {1, 2}}, 2)) == 0);
    CHECK(div_min(tuple_of({{1}, {2}, {3}}, 1)) == 2);
    CHECK_THROWS_AS(div_min(tuple_of({{1}}, 1)), std::invalid_argument);
}

TEST_CASE("vertex cover rewrites as a 2-hitting-set instance") {
    SimpleGraph triangle = SimpleGraph::make(3, {{1, 2}, {1, 3}, {2, 3}});
    HypergraphInstance inst = vc_as_hitting_set(triangle);
    CHECK(inst.n == 3);
    CHECK(inst.d == 2);
    REQUIRE(inst.family.size() == 3);
    CHECK(inst.family[0].elems == std::vector<ElementId>{1, 2});

    SimpleGraph edgeless = SimpleGraph::make(4, {});
    CHECK(vc_as_hitting_set(edgeless).family.empty());

    SimpleGraph one = SimpleGraph::make(2, {{1, 2}});
    CHECK(vc_as_hitting_set(one).family.size() == 1);
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(HypergraphInstance::make(3, {{}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(HypergraphInstance::make(3, {{1, 2, 3}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(HypergraphInstance::make(3, {{4}}, 2), std::invalid_argument);
    HypergraphInstance inst = HypergraphInstance::make(3, {{2, 1}, {1, 2}}, 2);
    CHECK(inst.family.size() == 1);  // duplicates collapse after canonicalization

    CHECK_THROWS_AS(SimpleGraph::make(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph::make(3, {{1, 4}}), std::invalid_argument);
    int dropped = 0;
    SimpleGraph g = SimpleGraph::make(2, {{1, 2}, {2, 1}}, &dropped);
    CHECK(g.edges.size() == 1);
    CHECK(dropped == 1);
}

TEST_CASE("hamming distance is a metric on random triples") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        Solution a = testutil::random_subset(rng, 8, 5);
        Solution b = testutil::random_subset(rng, 8, 5);
        Solution c = testutil::random_subset(rng, 8, 5);
        CHECK(hamming_distance(a, b) == hamming_distance(b, a));
        CHECK((hamming_distance(a, b) == 0) == (a == b));
        CHECK(hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c));
        CHECK(hamming_distance(a, b) <= a.size() + b.size());
    }
}

TEST_CASE("diversity identities on random tuples") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 300; ++iter) {
        int n = std::uniform_int_distribution<int>(1, 8)(rng);
        int r = std::uniform_int_distribution<int>(2, 5)(rng);
        SolutionTuple t;
        t.k = 5;
        for (int i = 0; i < r; ++i) t.sets.push_back(testutil::random_subset(rng, n, 5));
        CHECK(div_total(t) == div_total_by_frequency(t, n));
        CHECK(div_min(t) * r * (r - 1) / 2 <= div_total(t));
    }
}
