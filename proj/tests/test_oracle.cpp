#include "divsol/oracle.hpp"

#include <doctest.h>

using namespace divsol;

namespace {

const HypergraphInstance kTriangleVc = HypergraphInstance::make(3, {{1, 2}, {1, 3}, {2, 3}}, 2);

}  // namespace

TEST_CASE("complete hitting-set enumeration") {
    FullSolutionCatalog cat = enumerate_all_hitting_sets(kTriangleVc, 2);
    REQUIRE(cat.size() == 3);
    CHECK(cat.sets[0].elems == std::vector<ElementId>{1, 2});
    CHECK(cat.sets[1].elems == std::vector<ElementId>{1, 3});
    CHECK(cat.sets[2].elems == std::vector<ElementId>{2, 3});
}

TEST_CASE("complete FVS enumeration") {
    SimpleGraph c4 = SimpleGraph::make(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    FullSolutionCatalog cat = enumerate_all_fvs(c4, 1);
    REQUIRE(cat.size() == 4);
    for (int v = 1; v <= 4; ++v) CHECK(cat.sets[v - 1].elems == std::vector<ElementId>{v});

    SimpleGraph forest = SimpleGraph::make(3, {{1, 2}});
    cat = enumerate_all_fvs(forest, 0);
    REQUIRE(cat.size() == 1);
    CHECK(cat.sets[0].empty());
}

TEST_CASE("exhaustive best-tuple search") {
    FullSolutionCatalog covers = enumerate_all_hitting_sets(kTriangleVc, 2);
    BestTuple best = brute_force_best_tuple(covers, 2, Measure::min);
    CHECK(best.feasible);
    CHECK(best.diversity == 2);

    best = brute_force_best_tuple(covers, 1, Measure::total);
    CHECK(best.feasible);
    CHECK(best.diversity == 0);

    // Forced duplicates when the catalog is smaller than r.
    best = brute_force_best_tuple(covers, 5, Measure::min);
    CHECK(best.feasible);
    CHECK(best.diversity == 0);
    CHECK(best.tuple.r() == 5);

    FullSolutionCatalog empty;
    CHECK_FALSE(brute_force_best_tuple(empty, 2, Measure::total).feasible);
}

TEST_CASE("enumeration caps are hard errors") {
    HypergraphInstance big = HypergraphInstance::make(30, {{1}}, 1);
    CHECK_THROWS_AS(enumerate_all_hitting_sets(big, 1), EnumerationCapExceeded);

    FullSolutionCatalog covers = enumerate_all_hitting_sets(kTriangleVc, 2);
    OracleCaps tight;
    tight.max_tuples = 5;
    CHECK_THROWS_AS(brute_force_best_tuple(covers, 4, Measure::total, tight),
                    EnumerationCapExceeded);
}

TEST_CASE("exhaustive augmentation values") {
    CHECK(brute_force_augment_bases(4, {Solution({1}), Solution({2})}, 2) == 4);
    CHECK(brute_force_augment_bases(5, {Solution({1, 2}), Solution({2, 3})}, 2) == 2);
    std::vector<SolutionClass> empties(2);
    CHECK(brute_force_augment_classes(2, empties, 1) == 2);
}
