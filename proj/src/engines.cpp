#include "kromatic/engines.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

namespace kromatic {

Series chromatic_sym(const WeightedGraph& wg, int cap) {
    const Graph& g = wg.g;
    if (wg.total_weight() > cap) return Series(cap, false);
    Series out(cap, true);
    if (g.n == 0) {
        out.add_term(Partition{}, 1);
        return out;
    }
    // partitions of the vertex set into stable blocks; each contributes the
    // augmented monomial of its weight multiset
    std::vector<uint64_t> blocks;
    std::function<void(int)> rec = [&](int v) {
        if (v == g.n) {
            std::vector<int> parts;
            for (uint64_t b : blocks) parts.push_back(wg.set_weight(b));
            Partition la = Partition::from_unsorted(parts);
            Rat norm(1);
            for (int j = 1; j <= la.max_part(); ++j)
                if (int r = la.mult(j); r > 1) norm *= Rat(factorial(r));
            out.add_term(la, norm);
            return;
        }
        // index-based: the recursive push_back may reallocate the block list
        for (size_t bi = 0, nb = blocks.size(); bi < nb; ++bi) {
            if (g.adj[static_cast<size_t>(v)] & blocks[bi]) continue;
            blocks[bi] |= uint64_t{1} << v;
            rec(v + 1);
            blocks[bi] &= ~(uint64_t{1} << v);
        }
        blocks.push_back(uint64_t{1} << v);
        rec(v + 1);
        blocks.pop_back();
    };
    rec(0);
    return out;
}

Series kromatic_direct(const WeightedGraph& wg, int cap) {
    const Graph& g = wg.g;
    Series out(cap, false);
    if (cap > 24) throw std::invalid_argument("direct engine: cap too large for enumeration");
    if (wg.total_weight() > cap) return out;
    if (g.n == 0) {
        out.add_term(Partition{}, 1);
        return out;
    }
    int ncolors = cap;
    std::vector<uint64_t> chosen(static_cast<size_t>(g.n), 0);  // color sets as bitmasks
    std::vector<int> expo(static_cast<size_t>(ncolors), 0);
    std::vector<int> parts;
    // cheapest possible completion: one color per remaining vertex
    std::vector<int> tail_weight(static_cast<size_t>(g.n) + 1, 0);
    for (int v = g.n; v-- > 0;) tail_weight[static_cast<size_t>(v)] = tail_weight[static_cast<size_t>(v) + 1] + wg.w[static_cast<size_t>(v)];

    std::function<void(int, int)> rec = [&](int v, int used) {
        if (v == g.n) {
            std::vector<int> e(expo.begin(), expo.end());
            bool lead = true;
            for (size_t i = 0; lead && i < e.size(); ++i) {
                if (i > 0 && e[i] > e[i - 1]) lead = false;
                if (e[i] == 0)
                    for (size_t j = i; j < e.size(); ++j)
                        if (e[j] != 0) { lead = false; break; }
            }
            if (!lead) return;
            parts.clear();
            for (int x : e)
                if (x) parts.push_back(x);
            out.add_term(Partition(parts), 1);
            return;
        }
        uint64_t forbidden = 0;
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v)) forbidden |= chosen[static_cast<size_t>(u)];
        int budget = cap - used - tail_weight[static_cast<size_t>(v) + 1];  // weight available to v
        int maxk = budget / wg.w[static_cast<size_t>(v)];
        if (maxk < 1) return;
        std::vector<int> set;
        std::function<void(int)> pick = [&](int lo) {
            if (!set.empty()) {
                for (int c : set) expo[static_cast<size_t>(c - 1)] += wg.w[static_cast<size_t>(v)];
                uint64_t mask = 0;
                for (int c : set) mask |= uint64_t{1} << (c - 1);
                chosen[static_cast<size_t>(v)] = mask;
                rec(v + 1, used + wg.w[static_cast<size_t>(v)] * static_cast<int>(set.size()));
                chosen[static_cast<size_t>(v)] = 0;
                for (int c : set) expo[static_cast<size_t>(c - 1)] -= wg.w[static_cast<size_t>(v)];
            }
            if (static_cast<int>(set.size()) == maxk) return;
            for (int c = lo; c <= ncolors; ++c) {
                if (forbidden >> (c - 1) & 1) continue;
                set.push_back(c);
                pick(c + 1);
                set.pop_back();
            }
        };
        pick(1);
    };
    rec(0, 0);
    return out;
}

namespace {

struct WeightedStableSets {
    std::vector<int> values;                       // distinct set weights, descending
    std::vector<std::vector<uint64_t>> by_value;   // stable sets grouped by weight
};

WeightedStableSets grouped_stable_sets(const WeightedGraph& wg) {
    WeightedStableSets out;
    std::map<int, std::vector<uint64_t>, std::greater<int>> groups;
    for (uint64_t s : stable_sets(wg.g)) groups[wg.set_weight(s)].push_back(s);
    for (auto& [w, sets] : groups) {
        out.values.push_back(w);
        out.by_value.push_back(sets);
    }
    return out;
}

// Inclusion-exclusion core: coefficient of the multiset {values[j]^r_j} equals
// sum over U of (-1)^(n-|U|) * prod_j C(#stable sets of weight j inside U, r_j).
Expansion covers_core(const WeightedGraph& wg, long long max_size) {
    const Graph& g = wg.g;
    if (g.n < 1 || g.n > 24) throw std::invalid_argument("cover engine: need 1 <= n <= 24");
    auto groups = grouped_stable_sets(wg);
    size_t nv = groups.values.size();

    std::map<std::vector<int>, Int> acc;  // multiplicity vector -> signed count
    std::vector<int> counts(nv);
    for (uint64_t u = 0; u < (uint64_t{1} << g.n); ++u) {
        for (size_t j = 0; j < nv; ++j) {
            int c = 0;
            for (uint64_t s : groups.by_value[j])
                if ((s & ~u) == 0) ++c;
            counts[static_cast<size_t>(j)] = c;
        }
        bool sign_neg = ((g.n - std::popcount(u)) % 2) != 0;
        // product over j of (1 + y_j)^counts[j], truncated by total weight
        std::map<std::vector<int>, Int> poly;
        poly.emplace(std::vector<int>(nv, 0), 1);
        for (size_t j = 0; j < nv; ++j) {
            if (counts[j] == 0) continue;
            std::map<std::vector<int>, Int> next;
            for (const auto& [r, c] : poly) {
                long long deg = 0;
                for (size_t t = 0; t < nv; ++t) deg += static_cast<long long>(r[t]) * groups.values[t];
                for (int k = 0; k <= counts[j]; ++k) {
                    if (deg + static_cast<long long>(k) * groups.values[j] > max_size) break;
                    std::vector<int> r2 = r;
                    r2[j] = k;
                    next[std::move(r2)] += c * binomial(counts[j], k);
                }
            }
            poly = std::move(next);
        }
        for (const auto& [r, c] : poly) {
            if (c == 0) continue;
            auto it = acc.find(r);
            if (it == acc.end()) it = acc.emplace(r, 0).first;
            if (sign_neg)
                it->second -= c;
            else
                it->second += c;
        }
        if (acc.size() > 30'000'000) throw std::runtime_error("cover engine: expansion too large");
    }

    Expansion out;
    for (const auto& [r, c] : acc) {
        if (c == 0) continue;
        std::vector<int> parts;
        for (size_t j = 0; j < nv; ++j)
            parts.insert(parts.end(), static_cast<size_t>(r[j]), groups.values[j]);
        if (parts.empty()) continue;  // the empty family never covers n >= 1 vertices
        out.emplace(Partition(parts), c);
    }
    return out;
}

}  // namespace

Expansion kromatic_covers(const WeightedGraph& wg) {
    long long all = 0;
    auto groups = grouped_stable_sets(wg);
    for (size_t j = 0; j < groups.values.size(); ++j)
        all += static_cast<long long>(groups.values[j]) * static_cast<long long>(groups.by_value[j].size());
    return covers_core(wg, all);
}

Expansion kromatic_covers_truncated(const WeightedGraph& wg, int max_size) {
    return covers_core(wg, max_size);
}

namespace {

void delcon_rec(const WeightedGraph& wg, std::map<std::string, Expansion>& memo,
                Expansion& out, const Int& mult) {
    if (wg.g.is_complete()) {
        std::vector<int> parts = wg.w;
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        out[Partition(parts)] += mult;
        return;
    }
    std::string key = canonical_key(wg);
    auto it = memo.find(key);
    if (it == memo.end()) {
        Expansion local;
        auto [v, w] = wg.g.first_nonedge();
        DelconChildren ch = delcon_children(wg, v, w);
        Int one(1);
        delcon_rec(ch.contracted, memo, local, one);
        delcon_rec(ch.with_edge, memo, local, one);
        delcon_rec(ch.merged_v, memo, local, one);
        delcon_rec(ch.merged_w, memo, local, one);
        delcon_rec(ch.star, memo, local, one);
        it = memo.emplace(std::move(key), std::move(local)).first;
    }
    for (const auto& [la, c] : it->second) out[la] += c * mult;
}

}  // namespace

Expansion kromatic_delcon(const WeightedGraph& wg) {
    if (wg.g.n < 1) throw std::invalid_argument("delcon engine: need n >= 1");
    std::map<std::string, Expansion> memo;
    Expansion out;
    delcon_rec(wg, memo, out, Int(1));
    return out;
}

Expansion kromatic_delcon_at(const WeightedGraph& wg, int v, int w) {
    std::map<std::string, Expansion> memo;
    Expansion out;
    DelconChildren ch = delcon_children(wg, v, w);
    Int one(1);
    delcon_rec(ch.contracted, memo, out, one);
    delcon_rec(ch.with_edge, memo, out, one);
    delcon_rec(ch.merged_v, memo, out, one);
    delcon_rec(ch.merged_w, memo, out, one);
    delcon_rec(ch.star, memo, out, one);
    return out;
}

Series realize_expansion(const Expansion& ex, int cap) {
    Series out(cap, false);
    for (const auto& [la, c] : ex) {
        if (la.size() > cap) continue;
        Series term = family_series(BasisId::kMonomial, la, cap);
        term *= Rat(c);
        out += term;
    }
    return out;
}

Rat groth_coefficient(const Series& f, const Partition& la) {
    if (f.degree_cap() < la.size())
        throw std::invalid_argument("groth_coefficient: cap below size of the shape");
    return hall_inner(dual_groth_s(la), f);
}

std::map<std::vector<int>, long long> stable_profile(const WeightedGraph& wg) {
    const Graph& g = wg.g;
    if (g.n < 1 || g.n > 20) throw std::invalid_argument("stable_profile: need 1 <= n <= 20");
    auto groups = grouped_stable_sets(wg);
    size_t nv = groups.values.size();
    std::map<std::vector<int>, long long> acc;
    for (uint64_t u = 0; u < (uint64_t{1} << g.n); ++u) {
        // histogram key: (weight, count) pairs flattened, weights descending
        std::vector<int> key;
        for (size_t j = 0; j < nv; ++j) {
            int c = 0;
            for (uint64_t s : groups.by_value[j])
                if ((s & ~u) == 0) ++c;
            if (c) {
                key.push_back(groups.values[j]);
                key.push_back(c);
            }
        }
        acc[key] += ((g.n - std::popcount(u)) % 2) ? -1 : 1;
    }
    for (auto it = acc.begin(); it != acc.end();)
        it = (it->second == 0) ? acc.erase(it) : std::next(it);
    return acc;
}

bool kromatic_equal(const WeightedGraph& a, const WeightedGraph& b) {
    return stable_profile(a) == stable_profile(b);
}

}  // namespace kromatic
