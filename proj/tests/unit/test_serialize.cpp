#include "doctest.h"

#include "kromatic/engines.hpp"
#include "kromatic/graph.hpp"
#include "kromatic/poset.hpp"
#include "kromatic/serialize.hpp"

using namespace kromatic;

TEST_CASE("series json round-trip") {
    Series f(4, true);
    f.add_term(Partition({2, 1}), Rat(-7, 3));
    f.add_term(Partition({1}), 5);

    json j = series_to_json(f);
    CHECK(j["degreeCap"] == 4);
    CHECK(j["exact"] == true);
    Series back = series_from_json(j);
    CHECK(back == f);
    CHECK(back.degree_cap() == 4);
    CHECK(back.exact());

    // coefficients serialize as exact strings
    bool found = false;
    for (const auto& t : j["terms"])
        if (t["partition"] == json::array({2, 1})) {
            CHECK(t["coeff"] == "-7/3");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("computed series survive a round-trip") {
    Series f = kromatic_direct(named_graph("cycle:4"), 6);
    CHECK(series_from_json(series_to_json(f)) == f);
}

TEST_CASE("graph json round-trip") {
    WeightedGraph unit = named_graph("claw");
    json j = graph_to_json(unit);
    CHECK(j["n"] == 4);
    CHECK(!j.contains("weights"));  // unit weights stay implicit
    CHECK(graph_from_json(j) == unit);

    WeightedGraph wg(Graph(3, {{0, 1}}), {2, 1, 1});
    json jw = graph_to_json(wg);
    CHECK(jw["weights"] == json::array({2, 1, 1}));
    CHECK(graph_from_json(jw) == wg);
}

TEST_CASE("poset json round-trip") {
    Poset p = named_poset("2+1");
    Poset back = poset_from_json(poset_to_json(p));
    CHECK(back == p);
}

TEST_CASE("spec strings resolve to graphs and posets") {
    CHECK(parse_graph_spec("path:3") == named_graph("path:3"));
    WeightedGraph inlined = parse_graph_spec(R"({"n": 2, "edges": [[0, 1]]})");
    CHECK(inlined.g.has_edge(0, 1));
    CHECK(parse_poset_spec("2+1") == named_poset("2+1"));
    Poset pin = parse_poset_spec(R"({"n": 3, "less": [[0, 1], [1, 2]]})");
    CHECK(pin.less(0, 2));
    CHECK_THROWS(parse_graph_spec("no-such-graph"));
}

TEST_CASE("malformed payloads are rejected") {
    CHECK_THROWS(series_from_json(json::parse(R"({"degreeCap": 3})")));
    CHECK_THROWS(graph_from_json(json::parse(R"({"edges": []})")));
    CHECK_THROWS(graph_from_json(json::parse(R"({"n": 2, "edges": [[0, 5]]})")));
}
