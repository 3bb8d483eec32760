#include "divsol/io.hpp"

#include <json.hpp>

#include <doctest.h>

using namespace divsol;

TEST_CASE("hypergraph parsing") {
    HypergraphInstance inst = parse_hypergraph("p hs 3 3 2\ne 1 2\ne 1 3\ne 2 3\n");
    CHECK(inst.n == 3);
    CHECK(inst.d == 2);
    CHECK(inst.family.size() == 3);

    CHECK(parse_hypergraph("p hs 2 0 2\n").family.empty());
    CHECK(parse_hypergraph("c comment\np hs 2 1 2\ne 1 2\n").family.size() == 1);

    CHECK_THROWS_AS(parse_hypergraph("p hs 3 1 2\ne 1 2 3\n"), ParseError);  // set larger than d
    CHECK_THROWS_AS(parse_hypergraph("p hs 3 1 2\ne 4\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("p hs 3 1 2\ne\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("p hs 3\ne 1\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("p hs x 1 2\ne 1\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph(""), ParseError);
}

TEST_CASE("graph parsing") {
    SimpleGraph g = parse_graph("p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    CHECK(g.n == 4);
    CHECK(g.edges.size() == 4);

    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\nv 1 2\n"), ParseError);

    std::vector<std::string> warnings;
    g = parse_graph("p edge 2 1\ne 1 2\ne 1 2\n", &warnings);
    CHECK(g.edges.size() == 1);
    REQUIRE(warnings.size() == 1);
}

TEST_CASE("generators are deterministic") {
    std::string p10 = generate({.kind = "path", .n = 10});
    SimpleGraph g = parse_graph(p10);
    CHECK(g.n == 10);
    REQUIRE(g.edges.size() == 9);
    for (int v = 1; v < 10; ++v) CHECK(g.edges[v - 1] == std::make_pair(v, v + 1));

    CHECK(parse_graph(generate({.kind = "cycle", .n = 4})).edges.size() == 4);
    CHECK_THROWS_AS(generate({.kind = "cycle", .n = 2}), std::invalid_argument);
    CHECK_THROWS_AS(generate({.kind = "path", .n = 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate({.kind = "mystery", .n = 3}), std::invalid_argument);

    GenSpec hs{.kind = "random-hs", .n = 6, .m = 5, .d = 3, .seed = 1};
    CHECK(generate(hs) == generate(hs));
    HypergraphInstance inst = parse_hypergraph(generate(hs));
    CHECK(inst.n == 6);
    CHECK(inst.family.size() == 5);

    GenSpec rg{.kind = "random-graph", .n = 6, .m = 7, .seed = 2};
    CHECK(generate(rg) == generate(rg));
    CHECK(parse_graph(generate(rg)).edges.size() == 7);
    GenSpec rg2 = rg;
    rg2.seed = 3;
    CHECK(generate(rg) != generate(rg2));
}

TEST_CASE("result serialization") {
    DiverseQuery q;
    q.measure = Measure::min;
    q.k = 2;
    q.r = 2;
    DiverseResult res;
    res.feasible = true;
    res.tuple = SolutionTuple({Solution({1, 2}), Solution({2, 3})}, 2);
    res.diversity = 2;

    nlohmann::json doc = nlohmann::json::parse(emit_result(res, q, OutputFormat::json));
    CHECK(doc["feasible"] == true);
    CHECK(doc["diversity_min"] == 2);
    CHECK(doc["diversity_total"] == 2);
    CHECK(doc["measure"] == "min");
    CHECK(doc["k"] == 2);
    CHECK(doc["r"] == 2);
    CHECK(doc["t"].is_null());
    CHECK(doc["meets_target"].is_null());
    CHECK(doc["solutions"][0] == nlohmann::json::array({1, 2}));

    DiverseResult infeasible;
    doc = nlohmann::json::parse(emit_result(infeasible, q, OutputFormat::json));
    CHECK(doc["feasible"] == false);
    CHECK(doc["solutions"].is_null());

    std::string text = emit_result(res, q, OutputFormat::text);
    CHECK(text.find("diversity_min:   2") != std::string::npos);
    CHECK(text.find("feasible:        yes") != std::string::npos);
}
