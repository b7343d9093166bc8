#include "kromatic/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace kromatic {

Poset::Poset(int n_) : n(n_), above(static_cast<size_t>(n_), 0) {
    if (n_ < 0 || n_ > 64) throw std::invalid_argument("Poset: need 0 <= n <= 64");
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& less) {
    Poset p(n);
    for (auto [a, b] : less) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw std::invalid_argument("Poset: bad relation");
        p.above[static_cast<size_t>(a)] |= uint64_t{1} << b;
    }
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            if (p.above[static_cast<size_t>(a)] >> k & 1) p.above[static_cast<size_t>(a)] |= p.above[static_cast<size_t>(k)];
    for (int a = 0; a < n; ++a)
        if (p.above[static_cast<size_t>(a)] >> a & 1) throw std::invalid_argument("Poset: relation has a cycle");
    return p;
}

std::vector<std::pair<int, int>> Poset::relations() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (less(a, b)) out.push_back({a, b});
    return out;
}

Graph incomparability_graph(const Poset& p) {
    Graph g(p.n);
    for (int a = 0; a < p.n; ++a)
        for (int b = a + 1; b < p.n; ++b)
            if (!p.comparable(a, b)) g.add_edge(a, b);
    return g;
}

bool is_31_free(const Poset& p) {
    for (int a = 0; a < p.n; ++a)
        for (int b = 0; b < p.n; ++b) {
            if (!(p.less(a, b))) continue;
            for (int c = 0; c < p.n; ++c) {
                if (!(p.less(b, c))) continue;
                for (int d = 0; d < p.n; ++d) {
                    if (d == a || d == b || d == c) continue;
                    if (!p.comparable(d, a) && !p.comparable(d, b) && !p.comparable(d, c))
                        return false;
                }
            }
        }
    return true;
}

Poset chain(int n) {
    Poset p(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) p.above[static_cast<size_t>(a)] |= uint64_t{1} << b;
    return p;
}

Poset poset_sum(const Poset& a, const Poset& b) {
    Poset p(a.n + b.n);
    for (int v = 0; v < a.n; ++v) p.above[static_cast<size_t>(v)] = a.above[static_cast<size_t>(v)];
    for (int v = 0; v < b.n; ++v) p.above[static_cast<size_t>(a.n + v)] = b.above[static_cast<size_t>(v)] << a.n;
    return p;
}

Poset named_poset(const std::string& spec) {
    if (spec.rfind("chain:", 0) == 0) return chain(std::stoi(spec.substr(6)));
    // sums of chains: "3+1", "2+1+1", also plain "3"
    Poset acc(0);
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t plus = spec.find('+', pos);
        std::string tok = spec.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        size_t used = 0;
        int k = std::stoi(tok, &used);
        if (used != tok.size() || k <= 0) throw std::invalid_argument("named_poset: bad spec " + spec);
        acc = poset_sum(acc, chain(k));
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return acc;
}

bool poset_isomorphic(const Poset& a, const Poset& b) {
    if (a.n != b.n) return false;
    if (a.relations().size() != b.relations().size()) return false;
    std::vector<int> perm(static_cast<size_t>(a.n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int x = 0; x < a.n && ok; ++x)
            for (int y = 0; y < a.n && ok; ++y)
                if (a.less(x, y) != b.less(perm[static_cast<size_t>(x)], perm[static_cast<size_t>(y)])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<Poset> all_posets_up_to_iso(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("all_posets_up_to_iso: need 1 <= n <= 5");
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) slots.push_back({a, b});
    std::vector<Poset> reps;
    // orient every unordered pair three ways, keep transitive outcomes
    std::function<void(size_t, Poset&)> rec = [&](size_t i, Poset& p) {
        if (i == slots.size()) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        if (p.less(a, b) && p.less(b, c) && !p.less(a, c)) return;
            for (const Poset& r : reps)
                if (poset_isomorphic(p, r)) return;
            reps.push_back(p);
            return;
        }
        auto [a, b] = slots[i];
        rec(i + 1, p);
        p.above[static_cast<size_t>(a)] |= uint64_t{1} << b;
        rec(i + 1, p);
        p.above[static_cast<size_t>(a)] &= ~(uint64_t{1} << b);
        p.above[static_cast<size_t>(b)] |= uint64_t{1} << a;
        rec(i + 1, p);
        p.above[static_cast<size_t>(b)] &= ~(uint64_t{1} << a);
    };
    Poset seed(n);
    rec(0, seed);
    return reps;
}

}  // namespace kromatic
