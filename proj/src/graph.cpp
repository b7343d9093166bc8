#include "kromatic/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kromatic {

Graph::Graph(int n_) : n(n_), adj(static_cast<size_t>(n_), 0) {
    if (n_ < 0 || n_ > 64) throw std::invalid_argument("Graph: need 0 <= n <= 64");
}

Graph::Graph(int n_, const std::vector<std::pair<int, int>>& edges) : Graph(n_) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("Graph::add_edge: bad endpoints");
    adj[static_cast<size_t>(u)] |= uint64_t{1} << v;
    adj[static_cast<size_t>(v)] |= uint64_t{1} << u;
}

int Graph::degree(int v) const {
    return std::popcount(adj[static_cast<size_t>(v)]);
}

int Graph::edge_count() const {
    int s = 0;
    for (int v = 0; v < n; ++v) s += degree(v);
    return s / 2;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has_edge(u, v)) out.push_back({u, v});
    return out;
}

bool Graph::is_complete() const {
    return first_nonedge().first < 0;
}

std::pair<int, int> Graph::first_nonedge() const {
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!has_edge(u, v)) return {u, v};
    return {-1, -1};
}

bool Graph::is_stable(uint64_t set) const {
    for (int v = 0; v < n; ++v)
        if (set >> v & 1)
            if (adj[static_cast<size_t>(v)] & set) return false;
    return true;
}

Graph Graph::induced(uint64_t set) const {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
        if (set >> v & 1) verts.push_back(v);
    Graph out(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

bool Graph::is_connected() const {
    if (n == 0) return true;
    uint64_t seen = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        uint64_t fresh = adj[static_cast<size_t>(v)] & ~seen;
        while (fresh) {
            int u = std::countr_zero(fresh);
            fresh &= fresh - 1;
            seen |= uint64_t{1} << u;
            stack.push_back(u);
        }
    }
    return std::popcount(seen) == n;
}

bool Graph::is_tree() const {
    return is_connected() && edge_count() == n - 1;
}

WeightedGraph::WeightedGraph(Graph graph)
    : g(std::move(graph)), w(static_cast<size_t>(g.n), 1) {}

WeightedGraph::WeightedGraph(Graph graph, std::vector<int> weights)
    : g(std::move(graph)), w(std::move(weights)) {
    if (static_cast<int>(w.size()) != g.n)
        throw std::invalid_argument("WeightedGraph: weight count mismatch");
    for (int x : w)
        if (x <= 0) throw std::invalid_argument("WeightedGraph: weights must be positive");
}

int WeightedGraph::total_weight() const {
    return std::accumulate(w.begin(), w.end(), 0);
}

int WeightedGraph::set_weight(uint64_t set) const {
    int s = 0;
    for (int v = 0; v < g.n; ++v)
        if (set >> v & 1) s += w[static_cast<size_t>(v)];
    return s;
}

std::vector<uint64_t> stable_sets(const Graph& g) {
    std::vector<uint64_t> out;
    // extend sets by the lowest allowed vertex; every nonempty stable set shows up once
    std::function<void(uint64_t, int)> rec = [&](uint64_t cur, int next) {
        for (int v = next; v < g.n; ++v) {
            if (g.adj[static_cast<size_t>(v)] & cur) continue;
            out.push_back(cur | uint64_t{1} << v);
            rec(cur | uint64_t{1} << v, v + 1);
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<uint64_t>> stable_set_covers(const Graph& g) {
    auto sets = stable_sets(g);
    size_t m = sets.size();
    if (g.n == 0) return {{}};
    // union of sets from index i on, for pruning
    std::vector<uint64_t> suffix(m + 1, 0);
    for (size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] | sets[i];
    uint64_t all = (g.n == 64) ? ~uint64_t{0} : (uint64_t{1} << g.n) - 1;
    std::vector<std::vector<uint64_t>> out;
    std::vector<uint64_t> cur;
    std::function<void(size_t, uint64_t)> rec = [&](size_t i, uint64_t covered) {
        if ((covered | suffix[i]) != all) return;
        if (i == m) {
            out.push_back(cur);
            return;
        }
        cur.push_back(sets[i]);
        rec(i + 1, covered | sets[i]);
        cur.pop_back();
        rec(i + 1, covered);
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

int total_stability(const Graph& g) {
    return static_cast<int>(stable_sets(g).size()) - g.n;
}

namespace {

uint64_t neighbors_of(const Graph& g, int v) {
    return g.adj[static_cast<size_t>(v)];
}

}  // namespace

DelconChildren delcon_children(const WeightedGraph& wg, int v, int w) {
    const Graph& g = wg.g;
    if (v == w || v < 0 || w < 0 || v >= g.n || w >= g.n || g.has_edge(v, w))
        throw std::invalid_argument("delcon_children: need a nonedge");
    DelconChildren out;

    // contraction: drop v and w, append the glued vertex last
    {
        std::vector<int> keep;
        for (int u = 0; u < g.n; ++u)
            if (u != v && u != w) keep.push_back(u);
        Graph c(g.n - 1);
        std::vector<int> cw(static_cast<size_t>(g.n - 1));
        for (size_t i = 0; i < keep.size(); ++i) {
            cw[i] = wg.w[static_cast<size_t>(keep[i])];
            for (size_t j = i + 1; j < keep.size(); ++j)
                if (g.has_edge(keep[i], keep[j])) c.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
        int z = g.n - 2;
        uint64_t nb = neighbors_of(g, v) | neighbors_of(g, w);
        for (size_t i = 0; i < keep.size(); ++i)
            if (nb >> keep[i] & 1) c.add_edge(static_cast<int>(i), z);
        cw[static_cast<size_t>(z)] = wg.w[static_cast<size_t>(v)] + wg.w[static_cast<size_t>(w)];
        out.contracted = WeightedGraph(std::move(c), std::move(cw));
    }

    // plain edge addition
    {
        Graph c = g;
        c.add_edge(v, w);
        out.with_edge = WeightedGraph(std::move(c), wg.w);
    }

    // edge addition plus v joined to N(w); w's weight folds into v
    {
        Graph c = g;
        c.add_edge(v, w);
        uint64_t nw = neighbors_of(g, w);
        for (int u = 0; u < g.n; ++u)
            if ((nw >> u & 1) && u != v && !c.has_edge(v, u)) c.add_edge(v, u);
        std::vector<int> cw = wg.w;
        cw[static_cast<size_t>(v)] += wg.w[static_cast<size_t>(w)];
        out.merged_v = WeightedGraph(std::move(c), std::move(cw));
    }
    {
        Graph c = g;
        c.add_edge(v, w);
        uint64_t nv = neighbors_of(g, v);
        for (int u = 0; u < g.n; ++u)
            if ((nv >> u & 1) && u != w && !c.has_edge(w, u)) c.add_edge(w, u);
        std::vector<int> cw = wg.w;
        cw[static_cast<size_t>(w)] += wg.w[static_cast<size_t>(v)];
        out.merged_w = WeightedGraph(std::move(c), std::move(cw));
    }

    // new vertex adjacent to v, w and both neighborhoods
    {
        Graph c(g.n + 1);
        for (auto [a, b] : g.edge_list()) c.add_edge(a, b);
        c.add_edge(v, w);
        int z = g.n;
        uint64_t nb = neighbors_of(g, v) | neighbors_of(g, w) | uint64_t{1} << v | uint64_t{1} << w;
        for (int u = 0; u < g.n; ++u)
            if (nb >> u & 1) c.add_edge(u, z);
        std::vector<int> cw = wg.w;
        cw.push_back(wg.w[static_cast<size_t>(v)] + wg.w[static_cast<size_t>(w)]);
        out.star = WeightedGraph(std::move(c), std::move(cw));
    }
    return out;
}

Graph clan_graph(const Graph& g, const std::vector<int>& alpha) {
    if (static_cast<int>(alpha.size()) != g.n)
        throw std::invalid_argument("clan_graph: size mismatch");
    std::vector<int> start(static_cast<size_t>(g.n) + 1, 0);
    for (int v = 0; v < g.n; ++v) {
        if (alpha[static_cast<size_t>(v)] <= 0) throw std::invalid_argument("clan_graph: positive sizes required");
        start[static_cast<size_t>(v) + 1] = start[static_cast<size_t>(v)] + alpha[static_cast<size_t>(v)];
    }
    Graph out(start.back());
    for (int v = 0; v < g.n; ++v)
        for (int i = start[static_cast<size_t>(v)]; i < start[static_cast<size_t>(v) + 1]; ++i)
            for (int j = i + 1; j < start[static_cast<size_t>(v) + 1]; ++j) out.add_edge(i, j);
    for (auto [u, v] : g.edge_list())
        for (int i = start[static_cast<size_t>(u)]; i < start[static_cast<size_t>(u) + 1]; ++i)
            for (int j = start[static_cast<size_t>(v)]; j < start[static_cast<size_t>(v) + 1]; ++j)
                out.add_edge(i, j);
    return out;
}

bool is_claw_free(const Graph& g) {
    for (int c = 0; c < g.n; ++c) {
        std::vector<int> nb;
        for (int u = 0; u < g.n; ++u)
            if (g.has_edge(c, u)) nb.push_back(u);
        size_t d = nb.size();
        for (size_t i = 0; i < d; ++i)
            for (size_t j = i + 1; j < d; ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (size_t k = j + 1; k < d; ++k)
                    if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k])) return false;
            }
    }
    return true;
}

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph from_pairs(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace

WeightedGraph named_graph(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    auto arg = [&]() {
        if (colon == std::string::npos) throw std::invalid_argument("named_graph: missing size in " + spec);
        return std::stoi(spec.substr(colon + 1));
    };
    if (head == "path") return WeightedGraph(path_graph(arg()));
    if (head == "cycle") return WeightedGraph(cycle_graph(arg()));
    if (head == "complete") return WeightedGraph(complete_graph(arg()));
    if (head == "claw") return WeightedGraph(from_pairs(4, {{0, 1}, {0, 2}, {0, 3}}));
    if (head == "table1") {
        switch (arg()) {
            case 1: return WeightedGraph(from_pairs(3, {{0, 1}, {0, 2}}));
            case 2: return WeightedGraph(complete_graph(3));
            case 3: return WeightedGraph(from_pairs(4, {{1, 2}, {0, 1}, {2, 3}, {0, 3}}));
            case 4: return WeightedGraph(from_pairs(4, {{0, 2}, {0, 1}, {0, 3}, {2, 3}, {1, 3}}));
            case 5: return WeightedGraph(from_pairs(4, {{0, 1}, {0, 2}, {0, 3}}));
            default: throw std::invalid_argument("named_graph: table1 rows are 1..5");
        }
    }
    if (head == "ex1G")
        return WeightedGraph(from_pairs(5, {{0, 2}, {2, 3}, {0, 3}, {2, 4}, {1, 2}, {1, 4}}));
    if (head == "ex1H")
        return WeightedGraph(from_pairs(5, {{1, 3}, {2, 3}, {0, 1}, {1, 2}, {0, 3}, {2, 4}}));
    if (head == "ex2G")
        return WeightedGraph(from_pairs(6, {{0, 3}, {0, 5}, {1, 5}, {2, 4}, {2, 5}, {3, 5}}));
    if (head == "ex2H")
        return WeightedGraph(from_pairs(6, {{0, 2}, {0, 3}, {0, 5}, {1, 5}, {2, 4}, {2, 5}}));
    if (head == "ex3G")
        return WeightedGraph(from_pairs(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 7}, {4, 7},
                                            {1, 5}, {2, 5}, {0, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}}));
    if (head == "ex3H")
        return WeightedGraph(from_pairs(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 7}, {4, 7},
                                            {0, 5}, {1, 5}, {2, 5}, {3, 5}, {2, 6}, {4, 6}, {5, 6}}));
    throw std::invalid_argument("named_graph: unknown spec " + spec);
}

namespace {

// Rooted encoding with sorted child encodings; equal strings exactly for
// isomorphic rooted trees.
std::string ahu_encode(const Graph& g, int root, int parent) {
    std::vector<std::string> kids;
    uint64_t nb = g.adj[static_cast<size_t>(root)];
    for (int v = 0; v < g.n; ++v)
        if ((nb >> v & 1) && v != parent) kids.push_back(ahu_encode(g, v, root));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
}

std::vector<int> tree_centroids(const Graph& g) {
    int n = g.n;
    std::vector<int> sub(static_cast<size_t>(n), 1);
    std::vector<int> order, parent(static_cast<size_t>(n), -1);
    std::vector<int> stack{0};
    std::vector<bool> seen(static_cast<size_t>(n), false);
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int u = 0; u < n; ++u)
            if ((g.adj[static_cast<size_t>(v)] >> u & 1) && !seen[static_cast<size_t>(u)]) {
                seen[static_cast<size_t>(u)] = true;
                parent[static_cast<size_t>(u)] = v;
                stack.push_back(u);
            }
    }
    for (size_t i = order.size(); i-- > 1;)
        sub[static_cast<size_t>(parent[static_cast<size_t>(order[i])])] += sub[static_cast<size_t>(order[i])];
    std::vector<int> cents;
    for (int v = 0; v < n; ++v) {
        int big = n - sub[static_cast<size_t>(v)];
        for (int u = 0; u < n; ++u)
            if ((g.adj[static_cast<size_t>(v)] >> u & 1) && parent[static_cast<size_t>(u)] == v)
                big = std::max(big, sub[static_cast<size_t>(u)]);
        if (big <= n / 2) cents.push_back(v);
    }
    return cents;
}

std::string tree_canonical(const Graph& g) {
    if (g.n == 0) return "";
    std::string best;
    for (int c : tree_centroids(g)) {
        std::string s = ahu_encode(g, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

}  // namespace

std::vector<Graph> trees_up_to(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("trees_up_to: need 1 <= n <= 10");
    std::vector<Graph> out;
    std::vector<Graph> current{Graph(1)};
    out.push_back(current.front());
    for (int sz = 2; sz <= n; ++sz) {
        std::map<std::string, Graph> next;
        for (const Graph& t : current) {
            for (int v = 0; v < t.n; ++v) {
                Graph bigger(t.n + 1);
                for (auto [a, b] : t.edge_list()) bigger.add_edge(a, b);
                bigger.add_edge(v, t.n);
                next.emplace(tree_canonical(bigger), bigger);
            }
        }
        current.clear();
        for (auto& [key, t] : next) {
            current.push_back(t);
            out.push_back(t);
        }
    }
    return out;
}

namespace {

bool iso_backtrack(const Graph& a, const Graph& b, std::vector<int>& map, uint64_t used, int v) {
    if (v == a.n) return true;
    for (int u = 0; u < b.n; ++u) {
        if (used >> u & 1) continue;
        if (a.degree(v) != b.degree(u)) continue;
        bool ok = true;
        for (int p = 0; p < v && ok; ++p)
            if (a.has_edge(p, v) != b.has_edge(map[static_cast<size_t>(p)], u)) ok = false;
        if (!ok) continue;
        map[static_cast<size_t>(v)] = u;
        if (iso_backtrack(a, b, map, used | uint64_t{1} << u, v + 1)) return true;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    if (a.is_tree() && b.is_tree()) return tree_canonical(a) == tree_canonical(b);
    if (a.n > 8) throw std::invalid_argument("is_isomorphic: exact search limited to n <= 8 (trees excepted)");
    std::vector<int> map(static_cast<size_t>(a.n), -1);
    return iso_backtrack(a, b, map, 0, 0);
}

namespace {

std::string labeled_key(const WeightedGraph& wg, const std::vector<int>& perm) {
    // perm[i] = original vertex placed at position i
    std::string s;
    s.push_back(static_cast<char>(wg.g.n));
    for (int i = 0; i < wg.g.n; ++i) s.push_back(static_cast<char>(wg.w[static_cast<size_t>(perm[static_cast<size_t>(i)])]));
    for (int i = 0; i < wg.g.n; ++i)
        for (int j = i + 1; j < wg.g.n; ++j)
            s.push_back(wg.g.has_edge(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) ? '1' : '0');
    return s;
}

}  // namespace

std::string canonical_key(const WeightedGraph& wg) {
    int n = wg.g.n;
    std::vector<int> identity(static_cast<size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    if (n > 8) return labeled_key(wg, identity);

    // iterated refinement of vertex colors by (weight, degree, neighbor colors)
    std::vector<int> color(static_cast<size_t>(n));
    {
        std::vector<std::pair<int, int>> sig;
        for (int v = 0; v < n; ++v) sig.push_back({wg.w[static_cast<size_t>(v)], wg.g.degree(v)});
        std::vector<std::pair<int, int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v)
            color[static_cast<size_t>(v)] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<size_t>(v)]) - uniq.begin());
    }
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig;
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int u = 0; u < n; ++u)
                if (wg.g.has_edge(v, u)) nb.push_back(color[static_cast<size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            sig.push_back({color[static_cast<size_t>(v)], nb});
        }
        auto uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<int> fresh(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            fresh[static_cast<size_t>(v)] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<size_t>(v)]) - uniq.begin());
        if (fresh == color) break;
        color = fresh;
    }

    // vertices grouped by color class, classes in color order; minimize the key over
    // class-respecting permutations
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[color[static_cast<size_t>(v)]].push_back(v);
    std::vector<std::vector<int>> groups;
    for (auto& [c, vs] : classes) groups.push_back(vs);

    std::string best;
    std::vector<int> perm;
    std::function<void(size_t)> rec = [&](size_t gi) {
        if (gi == groups.size()) {
            std::string key = labeled_key(wg, perm);
            if (best.empty() || key < best) best = key;
            return;
        }
        std::vector<int> vs = groups[gi];
        std::sort(vs.begin(), vs.end());
        do {
            size_t len = perm.size();
            perm.insert(perm.end(), vs.begin(), vs.end());
            rec(gi + 1);
            perm.resize(len);
        } while (std::next_permutation(vs.begin(), vs.end()));
    };
    rec(0);
    return best;
}

std::vector<Graph> all_graphs_up_to_iso(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("all_graphs_up_to_iso: need 1 <= n <= 5");
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    std::vector<Graph> reps;
    for (uint64_t mask = 0; mask < (uint64_t{1} << slots.size()); ++mask) {
        Graph g(n);
        for (size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
        bool fresh = true;
        for (const Graph& r : reps)
            if (is_isomorphic(g, r)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(g);
    }
    return reps;
}

}  // namespace kromatic
