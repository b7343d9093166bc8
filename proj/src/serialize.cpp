#include "kromatic/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace kromatic {

namespace {

json term_entry(const Partition& la, const std::string& coeff) {
    json t;
    t["partition"] = la.parts();
    t["coeff"] = coeff;
    return t;
}

}  // namespace

json terms_to_json(const Coeffs& coeffs) {
    json out = json::array();
    for (const auto& [la, c] : coeffs) out.push_back(term_entry(la, rat_to_string(c)));
    return out;
}

json terms_to_json(const Expansion& ex) {
    json out = json::array();
    for (const auto& [la, c] : ex) out.push_back(term_entry(la, c.get_str()));
    return out;
}

Coeffs terms_from_json(const json& j) {
    Coeffs out;
    for (const auto& t : j) {
        Partition la(t.at("partition").get<std::vector<int>>());
        Rat c = rat_from_string(t.at("coeff").get<std::string>());
        if (c != 0) out[la] = c;
    }
    return out;
}

json series_to_json(const Series& f) {
    json out;
    out["degreeCap"] = f.degree_cap();
    out["exact"] = f.exact();
    out["terms"] = terms_to_json(f.terms());
    return out;
}

Series series_from_json(const json& j) {
    Series f(j.at("degreeCap").get<int>(), j.at("exact").get<bool>());
    for (const auto& [la, c] : terms_from_json(j.at("terms"))) f.add_term(la, c);
    return f;
}

json graph_to_json(const WeightedGraph& wg) {
    json edges = json::array();
    for (auto [u, v] : wg.g.edge_list()) edges.push_back(json::array({u, v}));
    json out;
    out["n"] = wg.g.n;
    out["edges"] = edges;
    for (int x : wg.w)
        if (x != 1) {
            out["weights"] = wg.w;
            break;
        }
    return out;
}

WeightedGraph graph_from_json(const json& j) {
    int n = j.at("n").get<int>();
    Graph g(n);
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph: bad edge entry");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("weights")) return WeightedGraph(g, j.at("weights").get<std::vector<int>>());
    return WeightedGraph(g);
}

json poset_to_json(const Poset& p) {
    json less = json::array();
    for (auto [a, b] : p.relations()) less.push_back(json::array({a, b}));
    json out;
    out["n"] = p.n;
    out["less"] = less;
    return out;
}

Poset poset_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> rel;
    for (const auto& e : j.at("less")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("poset: bad relation entry");
        rel.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Poset::from_relations(n, rel);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

WeightedGraph parse_graph_spec(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("empty graph spec");
    if (spec[0] == '@') return graph_from_json(load_json_file(spec.substr(1)));
    if (spec[0] == '{') return graph_from_json(json::parse(spec));
    return WeightedGraph(named_graph(spec));
}

Poset parse_poset_spec(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("empty poset spec");
    if (spec[0] == '@') return poset_from_json(load_json_file(spec.substr(1)));
    if (spec[0] == '{') return poset_from_json(json::parse(spec));
    return named_poset(spec);
}

}  // namespace kromatic
