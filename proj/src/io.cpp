#include "divsol/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace divsol {

namespace {

std::vector<std::vector<std::string>> tokenized_lines(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0] == "c") continue;
        lines.push_back(std::move(tokens));
    }
    return lines;
}

int parse_int(const std::string& tok, const char* what) {
    try {
        std::size_t pos = 0;
        int value = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected an integer for ") + what + ", got '" + tok + "'");
    }
}

}  // namespace

HypergraphInstance parse_hypergraph(const std::string& text) {
    auto lines = tokenized_lines(text);
    if (lines.empty()) throw ParseError("empty input");
    const auto& header = lines[0];
    if (header.size() != 5 || header[0] != "p" || header[1] != "hs")
        throw ParseError("malformed header: expected 'p hs <n> <m> <d>'");
    int n = parse_int(header[2], "n");
    int m = parse_int(header[3], "m");
    int d = parse_int(header[4], "d");
    (void)m;  // informational; the actual set lines are authoritative

    std::vector<std::vector<ElementId>> sets;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& tokens = lines[i];
        if (tokens[0] != "e") throw ParseError("unexpected line starting with '" + tokens[0] + "'");
        if (tokens.size() < 2) throw ParseError("empty set in family");
        std::vector<ElementId> set;
        for (std::size_t j = 1; j < tokens.size(); ++j)
            set.push_back(parse_int(tokens[j], "element"));
        sets.push_back(std::move(set));
    }
    try {
        return HypergraphInstance::make(n, std::move(sets), d);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

SimpleGraph parse_graph(const std::string& text, std::vector<std::string>* warnings) {
    auto lines = tokenized_lines(text);
    if (lines.empty()) throw ParseError("empty input");
    const auto& header = lines[0];
    if (header.size() != 4 || header[0] != "p" || header[1] != "edge")
        throw ParseError("malformed header: expected 'p edge <n> <m>'");
    int n = parse_int(header[2], "n");
    int m = parse_int(header[3], "m");
    (void)m;

    std::vector<std::pair<ElementId, ElementId>> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& tokens = lines[i];
        if (tokens[0] != "e") throw ParseError("unexpected line starting with '" + tokens[0] + "'");
        if (tokens.size() != 3) throw ParseError("edge lines must read 'e u v'");
        edges.emplace_back(parse_int(tokens[1], "endpoint"), parse_int(tokens[2], "endpoint"));
    }
    try {
        int dropped = 0;
        SimpleGraph g = SimpleGraph::make(n, std::move(edges), &dropped);
        if (dropped > 0 && warnings)
            warnings->push_back(std::to_string(dropped) + " duplicate edge(s) collapsed");
        return g;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

namespace {

std::string graph_text(int n, const std::vector<std::pair<int, int>>& edges,
                       const std::string& comment) {
    std::ostringstream out;
    out << "c " << comment << '\n';
    out << "p edge " << n << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace

std::string generate(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generator needs n >= 1");
    std::ostringstream tag;
    tag << "gen " << spec.kind << " n=" << spec.n;

    if (spec.kind == "path") {
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < spec.n; ++v) edges.emplace_back(v, v + 1);
        return graph_text(spec.n, edges, tag.str());
    }
    if (spec.kind == "cycle") {
        if (spec.n < 3) throw std::invalid_argument("a cycle needs n >= 3");
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < spec.n; ++v) edges.emplace_back(v, v + 1);
        edges.emplace_back(1, spec.n);
        return graph_text(spec.n, edges, tag.str());
    }
    if (spec.kind == "random-graph") {
        tag << " m=" << spec.m << " seed=" << spec.seed;
        std::vector<std::pair<int, int>> all;
        for (int u = 1; u <= spec.n; ++u)
            for (int v = u + 1; v <= spec.n; ++v) all.emplace_back(u, v);
        if (spec.m < 0 || spec.m > static_cast<int>(all.size()))
            throw std::invalid_argument("edge count m out of range");
        std::mt19937 rng(spec.seed);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(static_cast<std::size_t>(spec.m));
        std::sort(all.begin(), all.end());
        return graph_text(spec.n, all, tag.str());
    }
    if (spec.kind == "random-hs") {
        tag << " m=" << spec.m << " d=" << spec.d << " seed=" << spec.seed;
        if (spec.d < 1) throw std::invalid_argument("random-hs needs d >= 1");
        if (spec.m < 0) throw std::invalid_argument("random-hs needs m >= 0");
        std::mt19937 rng(spec.seed);
        std::vector<std::vector<ElementId>> family;
        std::set<std::vector<ElementId>> seen;
        std::uniform_int_distribution<int> size_dist(1, std::min(spec.d, spec.n));
        std::uniform_int_distribution<int> elem_dist(1, spec.n);
        long long attempts = 0;
        const long long max_attempts = 1000LL * (spec.m + 1);
        while (static_cast<int>(family.size()) < spec.m) {
            if (++attempts > max_attempts)
                throw std::invalid_argument("cannot draw the requested number of distinct sets");
            int size = size_dist(rng);
            std::set<ElementId> set;
            while (static_cast<int>(set.size()) < size) set.insert(elem_dist(rng));
            std::vector<ElementId> sorted(set.begin(), set.end());
            if (seen.insert(sorted).second) family.push_back(std::move(sorted));
        }
        std::sort(family.begin(), family.end());
        std::ostringstream out;
        out << "c " << tag.str() << '\n';
        out << "p hs " << spec.n << ' ' << family.size() << ' ' << spec.d << '\n';
        for (const auto& set : family) {
            out << "e";
            for (ElementId v : set) out << ' ' << v;
            out << '\n';
        }
        return out.str();
    }
    throw std::invalid_argument("unknown generator kind '" + spec.kind + "'");
}

namespace {

const char* measure_name(Measure m) { return m == Measure::total ? "total" : "min"; }

}  // namespace

std::string emit_result(const DiverseResult& res, const DiverseQuery& q, OutputFormat fmt) {
    int total = -1, min = -1;
    if (res.feasible && res.tuple) {
        total = div_total(*res.tuple);
        if (res.tuple->r() >= 2) min = div_min(*res.tuple);
    }

    if (fmt == OutputFormat::json) {
        nlohmann::json out;
        out["feasible"] = res.feasible;
        out["measure"] = measure_name(q.measure);
        out["k"] = q.k;
        out["r"] = q.r;
        out["t"] = q.t ? nlohmann::json(*q.t) : nlohmann::json(nullptr);
        out["meets_target"] =
            res.meets_target ? nlohmann::json(*res.meets_target) : nlohmann::json(nullptr);
        if (res.feasible && res.tuple) {
            nlohmann::json sols = nlohmann::json::array();
            for (const Solution& s : res.tuple->sets) sols.push_back(s.elems);
            out["solutions"] = std::move(sols);
            out["diversity_total"] = total;
            out["diversity_min"] = min >= 0 ? nlohmann::json(min) : nlohmann::json(nullptr);
        } else {
            out["solutions"] = nullptr;
            out["diversity_total"] = nullptr;
            out["diversity_min"] = nullptr;
        }
        return out.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "feasible:        " << (res.feasible ? "yes" : "no") << '\n';
    out << "measure:         " << measure_name(q.measure) << '\n';
    out << "k / r:           " << q.k << " / " << q.r << '\n';
    if (q.t) {
        out << "target t:        " << *q.t;
        if (res.meets_target) out << (*res.meets_target ? " (met)" : " (missed)");
        out << '\n';
    }
    if (res.feasible && res.tuple) {
        out << "diversity_total: " << total << '\n';
        if (min >= 0) out << "diversity_min:   " << min << '\n';
        out << "solutions:\n";
        for (int i = 0; i < res.tuple->r(); ++i) {
            out << "  " << (i + 1) << ":";
            for (ElementId v : res.tuple->sets[i].elems) out << ' ' << v;
            if (res.tuple->sets[i].empty()) out << " (empty)";
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace divsol
