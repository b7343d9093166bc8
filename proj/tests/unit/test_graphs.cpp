#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "kromatic/graph.hpp"

using namespace kromatic;

TEST_CASE("graph basics") {
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(1, 0));
    CHECK(!p3.has_edge(0, 2));
    CHECK(p3.degree(1) == 2);
    CHECK(p3.first_nonedge() == std::pair<int, int>{0, 2});
    CHECK(p3.is_connected());
    CHECK(p3.is_tree());
    CHECK(!Graph(3, {{0, 1}}).is_connected());
    CHECK(Graph(3, {{0, 1}, {1, 2}, {0, 2}}).is_complete());
    CHECK_THROWS(Graph(2, {{0, 2}}));
}

TEST_CASE("stable sets and covers") {
    Graph p3(3, {{0, 1}, {1, 2}});
    auto stables = stable_sets(p3);
    CHECK(stables.size() == 4);  // {0},{1},{2},{0,2}
    for (uint64_t s : stables) CHECK(p3.is_stable(s));
    CHECK(stable_set_covers(p3).size() == 5);
    CHECK(total_stability(p3) == 1);

    Graph claw(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(stable_set_covers(claw).size() == 109);
    // complete graph: single cover by singletons
    CHECK(stable_set_covers(Graph(3, {{0, 1}, {1, 2}, {0, 2}})).size() == 1);
    CHECK(total_stability(Graph(3, {{0, 1}, {1, 2}, {0, 2}})) == 0);
}

TEST_CASE("five-term children shrink total stability") {
    for (const Graph& g : all_graphs_up_to_iso(4)) {
        auto [v, w] = g.first_nonedge();
        if (v < 0) continue;
        int ts = total_stability(g);
        DelconChildren ch = delcon_children(WeightedGraph(g), v, w);
        for (const WeightedGraph* child :
             {&ch.contracted, &ch.with_edge, &ch.merged_v, &ch.merged_w, &ch.star})
            CHECK(total_stability(child->g) < ts);
    }
}

TEST_CASE("tree enumeration counts") {
    std::map<int, int> per_size;
    for (const Graph& t : trees_up_to(7)) {
        CHECK(t.is_tree());
        per_size[t.n]++;
    }
    CHECK(per_size == std::map<int, int>{{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 3}, {6, 6}, {7, 11}});

    auto trees = trees_up_to(5);
    for (size_t i = 0; i < trees.size(); ++i)
        for (size_t j = i + 1; j < trees.size(); ++j)
            CHECK(!is_isomorphic(trees[i], trees[j]));
}

TEST_CASE("graphs up to isomorphism") {
    CHECK(all_graphs_up_to_iso(1).size() == 1);
    CHECK(all_graphs_up_to_iso(2).size() == 2);
    CHECK(all_graphs_up_to_iso(3).size() == 4);
    CHECK(all_graphs_up_to_iso(4).size() == 11);
}

TEST_CASE("isomorphism and canonical keys") {
    Graph a(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph b(4, {{2, 0}, {0, 3}, {3, 1}});  // relabeled path
    CHECK(is_isomorphic(a, b));
    CHECK(canonical_key(WeightedGraph(a)) == canonical_key(WeightedGraph(b)));

    Graph claw(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(!is_isomorphic(a, claw));
    CHECK(canonical_key(WeightedGraph(a)) != canonical_key(WeightedGraph(claw)));

    // weights matter
    WeightedGraph wa(a, {2, 1, 1, 1});
    WeightedGraph wb(b, {1, 1, 2, 1});  // weight follows the relabeling: old 0 -> new 2
    CHECK(canonical_key(wa) == canonical_key(wb));
    CHECK(canonical_key(wa) != canonical_key(WeightedGraph(a)));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> perm{0, 1, 2, 3, 4};
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
        Graph h(5);
        for (auto [u, v] : g.edge_list()) h.add_edge(perm[u], perm[v]);
        CHECK(canonical_key(WeightedGraph(g)) == canonical_key(WeightedGraph(h)));
    }
}

TEST_CASE("claw-free test") {
    CHECK(!is_claw_free(Graph(4, {{0, 1}, {0, 2}, {0, 3}})));
    CHECK(is_claw_free(Graph(3, {{0, 1}, {1, 2}})));
    CHECK(is_claw_free(Graph(4, {{0, 1}, {1, 2}, {2, 3}})));
    CHECK(is_claw_free(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})));
    // claw with an extra edge is claw-free only if the claw is broken
    CHECK(!is_claw_free(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}})));
}

TEST_CASE("named graph fixtures") {
    CHECK(named_graph("path:3").g.edge_count() == 2);
    CHECK(named_graph("cycle:4").g.edge_count() == 4);
    CHECK(named_graph("complete:4").g.edge_count() == 6);
    CHECK(named_graph("claw").g.edge_count() == 3);
    CHECK(is_isomorphic(named_graph("table1:1").g, named_graph("path:3").g));
    CHECK(named_graph("table1:2").g.is_complete());
    CHECK(is_isomorphic(named_graph("table1:3").g, named_graph("cycle:4").g));
    CHECK(named_graph("table1:4").g.edge_count() == 5);  // diamond
    CHECK(is_isomorphic(named_graph("table1:5").g, named_graph("claw").g));
    for (const char* name : {"ex1G", "ex1H"}) CHECK(named_graph(name).g.n == 5);
    for (const char* name : {"ex2G", "ex2H"}) CHECK(named_graph(name).g.n == 6);
    for (const char* name : {"ex3G", "ex3H"}) CHECK(named_graph(name).g.n == 8);
    CHECK_THROWS(named_graph("zigzag:3"));
    CHECK_THROWS(named_graph("cycle:2"));
}

TEST_CASE("clan graph expansion") {
    // duplicating one vertex of an edge gives a triangle when clones stay adjacent
    Graph k2(2, {{0, 1}});
    Graph tri = clan_graph(k2, {2, 1});
    CHECK(tri.n == 3);
    CHECK(tri.is_complete());

    // blocks are cliques even when the base graph has no edges
    Graph g = clan_graph(Graph(2), {2, 2});
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 3));
    CHECK(!g.has_edge(1, 2));
}
