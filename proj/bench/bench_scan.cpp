// Benchmark: the serial reference scan against the OpenMP kernels, on the two
// hot paths — the catalog-tuple scan of the hitting-set solver and the
// subset-parallel FVS class construction. Results must agree bit for bit.

#include "divsol/fvs.hpp"
#include "divsol/io.hpp"
#include "divsol/solvers.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace divsol;

namespace {

double time_ms(const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::vector<int> thread_counts() {
#ifdef _OPENMP
    std::vector<int> counts = {1};
    for (int t = 2; t <= omp_get_max_threads(); t *= 2) counts.push_back(t);
    return counts;
#else
    return {1};
#endif
}

void print_row(int threads, double ms, double base_ms, bool same) {
    std::cout << std::setw(8) << threads << std::setw(12) << std::fixed << std::setprecision(1)
              << ms << std::setw(10) << std::setprecision(2) << base_ms / ms << std::setw(10)
              << (same ? "yes" : "NO") << '\n';
}

// Random family of m distinct 3-element sets; uniform 1..d sizes would seed
// too many forced singletons and starve the catalog.
HypergraphInstance triple_instance(int n, int m, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> elem(1, n);
    std::set<std::vector<ElementId>> sets;
    while (static_cast<int>(sets.size()) < m) {
        std::set<ElementId> s;
        while (static_cast<int>(s.size()) < 3) s.insert(elem(rng));
        sets.insert(std::vector<ElementId>(s.begin(), s.end()));
    }
    return HypergraphInstance::make(
        n, std::vector<std::vector<ElementId>>(sets.begin(), sets.end()), 3);
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 15;
    int m = argc > 2 ? std::atoi(argv[2]) : 14;
    int k = argc > 3 ? std::atoi(argv[3]) : 6;
    int r = argc > 4 ? std::atoi(argv[4]) : 3;

    HypergraphInstance inst = triple_instance(n, m, 9);
    std::cout << "tuple scan: diverse hitting set, n=" << n << " m=" << m << " k=" << k
              << " r=" << r << " (catalog "
              << enumerate_minimal_hitting_sets(inst, k).size() << " minimal sets)\n";
    std::cout << std::setw(8) << "threads" << std::setw(12) << "wall ms" << std::setw(10)
              << "speedup" << std::setw(10) << "equal" << '\n';

    DiverseResult reference;
    double base_ms = 0;
    for (int threads : thread_counts()) {
        SolveOptions opts{.threads = threads, .tuple_budget = 100'000'000};
        DiverseResult res;
        double ms = time_ms([&] { res = solve_diverse_hitting_set(inst, k, r, opts); });
        if (threads == 1) {
            reference = res;
            base_ms = ms;
        }
        bool same = res.feasible == reference.feasible &&
                    (!res.feasible || (res.diversity == reference.diversity &&
                                       res.tuple->sets == reference.tuple->sets));
        print_row(threads, ms, base_ms, same);
    }

    SimpleGraph g =
        parse_graph(generate({.kind = "random-graph", .n = 26, .m = 52, .seed = 11}));
    int fvs_k = 14;
    std::cout << "\nclass construction: FVS classes, n=" << g.n << " |E|=" << g.edges.size()
              << " k=" << fvs_k << '\n';
    std::cout << std::setw(8) << "threads" << std::setw(12) << "wall ms" << std::setw(10)
              << "speedup" << std::setw(10) << "equal" << '\n';

    std::vector<SolutionClass> ref_classes;
    base_ms = 0;
    for (int threads : thread_counts()) {
        std::vector<SolutionClass> classes;
        double ms = time_ms(
            [&] { classes = build_fvs_classes(g, fvs_k, FvsClassOptions{.threads = threads}); });
        if (threads == 1) {
            ref_classes = classes;
            base_ms = ms;
        }
        print_row(threads, ms, base_ms, classes == ref_classes);
    }
    std::cout << "(" << ref_classes.size() << " classes)\n";
    return 0;
}
