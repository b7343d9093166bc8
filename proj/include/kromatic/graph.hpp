#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kromatic {

// Simple undirected graph on vertices 0..n-1, adjacency kept as bitmasks (n <= 64).
struct Graph {
    int n = 0;
    std::vector<uint64_t> adj;

    Graph() = default;
    explicit Graph(int n_);
    Graph(int n_, const std::vector<std::pair<int, int>>& edges);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj[static_cast<size_t>(u)] >> v & 1; }
    int degree(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edge_list() const;  // sorted
    bool is_complete() const;
    // smallest missing edge in lexicographic (u, v) order, or {-1, -1}
    std::pair<int, int> first_nonedge() const;
    bool is_stable(uint64_t set) const;
    Graph induced(uint64_t set) const;  // keeps relative vertex order
    bool is_connected() const;
    bool is_tree() const;

    bool operator==(const Graph&) const = default;
};

struct WeightedGraph {
    Graph g;
    std::vector<int> w;  // positive vertex weights

    WeightedGraph() = default;
    explicit WeightedGraph(Graph graph);  // unit weights
    WeightedGraph(Graph graph, std::vector<int> weights);

    int total_weight() const;
    int set_weight(uint64_t set) const;

    bool operator==(const WeightedGraph&) const = default;
};

// All nonempty stable sets, ascending as bitmasks.
std::vector<uint64_t> stable_sets(const Graph& g);

// Families of distinct stable sets whose union is the whole vertex set, by direct
// enumeration over the stable-set list with cover pruning.  Exponential; meant for
// small graphs.
std::vector<std::vector<uint64_t>> stable_set_covers(const Graph& g);

// Number of stable sets minus number of vertices; zero exactly for complete graphs.
int total_stability(const Graph& g);

// The five graphs of the deletion-contraction-style recurrence at a nonedge {v, w}.
// Every child has strictly smaller total stability.
struct DelconChildren {
    WeightedGraph contracted;  // v, w glued; new vertex appended last
    WeightedGraph with_edge;   // edge vw added
    WeightedGraph merged_v;    // edge vw plus v joined to N(w); weight of w folded into v
    WeightedGraph merged_w;    // symmetric
    WeightedGraph star;        // new vertex adjacent to v, w, N(v), N(w); appended last
};

DelconChildren delcon_children(const WeightedGraph& wg, int v, int w);

// Blow each vertex v up into a clique of alpha[v] vertices; adjacent cliques are
// fully joined.  Blocks keep the original vertex order.
Graph clan_graph(const Graph& g, const std::vector<int>& alpha);

bool is_claw_free(const Graph& g);

// "path:n", "cycle:n", "complete:n", "claw", "table1:k" (k = 1..5) and the paired
// examples "ex1G".."ex3H".  Unit weights.
WeightedGraph named_graph(const std::string& spec);

// One representative per isomorphism class of trees with 1..n vertices (n <= 10).
std::vector<Graph> trees_up_to(int n);

bool is_isomorphic(const Graph& a, const Graph& b);

// Isomorphism-invariant key for weighted graphs with n <= 8 (exact canonical form);
// beyond that the labeled encoding is returned.
std::string canonical_key(const WeightedGraph& wg);

// All graphs on n vertices up to isomorphism (n <= 5), for exhaustive tests.
std::vector<Graph> all_graphs_up_to_iso(int n);

}  // namespace kromatic
