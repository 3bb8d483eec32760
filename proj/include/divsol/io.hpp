#pragma once

// DIMACS-style instance parsing, instance generators, and result
// serialization. Formats are line oriented: 'c' comment lines, a 'p' header,
// then one 'e' line per set or edge; whitespace-separated tokens, LF endings.

#include "divsol/core.hpp"
#include "divsol/solvers.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace divsol {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Header `p hs <n> <m> <d>`, then lines `e v1 v2 ... vj` with 1 <= j <= d.
HypergraphInstance parse_hypergraph(const std::string& text);

// Header `p edge <n> <m>`, then lines `e u v`. Duplicate edges are collapsed
// with a warning; self-loops are rejected.
SimpleGraph parse_graph(const std::string& text, std::vector<std::string>* warnings = nullptr);

struct GenSpec {
    std::string kind;  // path | cycle | random-hs | random-graph
    int n = 0;
    int m = 0;
    int d = 0;
    unsigned seed = 0;
};

// Deterministic instance text for a given spec (byte-identical across runs).
std::string generate(const GenSpec& spec);

enum class OutputFormat { json, text };

// JSON object with keys feasible, solutions, diversity_total, diversity_min,
// measure, k, r, t, meets_target (null where absent), or the same data as a
// readable table.
std::string emit_result(const DiverseResult& res, const DiverseQuery& q, OutputFormat fmt);

}  // namespace divsol
