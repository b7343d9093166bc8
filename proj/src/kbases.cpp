#include "kromatic/kbases.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace kromatic {

int SetValuedTableau::total_size() const {
    int n = 0;
    for (const auto& row : cells)
        for (const auto& cell : row) n += static_cast<int>(cell.size());
    return n;
}

namespace {

// Nonempty subsets of [lo, max_entry], ordered by (min, then ascending bitmask on the
// rest); each subset delivered as a sorted vector.
void for_each_subset(int lo, int max_entry, int max_extra,
                     const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (!cur.empty()) fn(cur);
        if (static_cast<int>(cur.size()) > max_extra) return;
        for (int v = next; v <= max_entry; ++v) {
            if (static_cast<int>(cur.size()) > max_extra) break;
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    (void)lo;
    rec(lo);
}

}  // namespace

std::vector<SetValuedTableau> enumerate_svt(const Partition& shape, int max_entry,
                                            int max_size) {
    std::vector<SetValuedTableau> out;
    int rows = shape.length();
    if (shape.size() > max_size) return out;
    if (rows == 0) {
        out.push_back(SetValuedTableau{shape, {}});
        return out;
    }
    SetValuedTableau t;
    t.shape = shape;
    t.cells.resize(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) t.cells[static_cast<size_t>(i)].resize(static_cast<size_t>(shape.part(i)));

    int used = 0;
    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == rows) {
            out.push_back(t);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == shape.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t.cells[static_cast<size_t>(r)][static_cast<size_t>(c - 1)].back());
        if (r > 0 && c < shape.part(r - 1))
            lo = std::max(lo, t.cells[static_cast<size_t>(r - 1)][static_cast<size_t>(c)].back() + 1);
        int cells_left = 0;
        for (int i = r; i < rows; ++i)
            cells_left += shape.part(i) - ((i == r) ? c : 0);
        int budget = max_size - used - cells_left;  // extra entries beyond one per cell
        if (budget < 0) return;
        for_each_subset(lo, max_entry, budget, [&](const std::vector<int>& set) {
            t.cells[static_cast<size_t>(r)][static_cast<size_t>(c)] = set;
            used += static_cast<int>(set.size());
            if (used + cells_left - 1 <= max_size) fill(nr, nc);
            used -= static_cast<int>(set.size());
        });
    };
    fill(0, 0);
    return out;
}

namespace {

bool leading_partition(const std::vector<int>& expo, std::vector<int>& parts) {
    parts.clear();
    for (size_t i = 0; i < expo.size(); ++i) {
        if (i > 0 && expo[i] > expo[i - 1]) return false;
        if (expo[i] == 0) {
            for (size_t j = i; j < expo.size(); ++j)
                if (expo[j] != 0) return false;
            break;
        }
        parts.push_back(expo[i]);
    }
    return true;
}

}  // namespace

Series groth_s(const Partition& la, int cap) {
    if (la.size() > cap) return Series(cap, false);
    Series out(cap, false);
    auto tableaux = enumerate_svt(la, cap, cap);
    std::vector<int> expo(static_cast<size_t>(cap), 0);
    std::vector<int> parts;
    for (const auto& t : tableaux) {
        std::fill(expo.begin(), expo.end(), 0);
        for (const auto& row : t.cells)
            for (const auto& cell : row)
                for (int v : cell) expo[static_cast<size_t>(v - 1)]++;
        if (!leading_partition(expo, parts)) continue;
        int sz = t.total_size();
        out.add_term(Partition(parts), ((sz - la.size()) % 2 == 0) ? Rat(1) : Rat(-1));
    }
    return out;
}

Series dual_groth_s(const Partition& la) {
    int deg = la.size();
    int k = la.length();
    Series out(deg, true);
    if (k == 0) {
        out.add_term(Partition{}, 1);
        return out;
    }
    // Accumulate the h-expansion first, then expand each h down to m once.
    std::map<Partition, Int, PartitionCanonicalLess> hcoeffs;
    std::vector<int> perm(static_cast<size_t>(k));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        int sign = 1;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sign = -sign;
        std::vector<int> top(static_cast<size_t>(k));  // row budgets la_i - i + pi(i), 1-indexed i
        bool dead = false;
        for (int i = 1; i <= k; ++i) {
            top[static_cast<size_t>(i - 1)] = la.part(i - 1) - i + perm[static_cast<size_t>(i - 1)];
            if (top[static_cast<size_t>(i - 1)] < 0) dead = true;
        }
        if (dead) continue;
        // choose how many entries each row trades for the multichoose factor
        std::vector<int> l(static_cast<size_t>(k), 0);
        std::function<void(int, Int)> rec = [&](int i, Int factor) {
            if (i == k) {
                std::vector<int> hparts;
                for (int r = 0; r < k; ++r) {
                    int v = top[static_cast<size_t>(r)] - l[static_cast<size_t>(r)];
                    if (v > 0) hparts.push_back(v);
                }
                hcoeffs[Partition::from_unsorted(hparts)] += sign * factor;
                return;
            }
            for (int li = 0; li <= top[static_cast<size_t>(i)]; ++li) {
                Int f = multichoose(i, li);  // i is 0-indexed, factor multichoose(row-1, l)
                if (f == 0) continue;
                l[static_cast<size_t>(i)] = li;
                rec(i + 1, factor * f);
            }
            l[static_cast<size_t>(i)] = 0;
        };
        rec(0, Int(1));
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (const auto& [mu, c] : hcoeffs) {
        if (c == 0) continue;
        Series hm = generator(BasisId::h, mu, deg);
        hm *= Rat(c);
        out += hm;
    }
    out.set_exact(true);
    return out;
}

Series k_monomial(const Partition& la, int cap) {
    Series out(cap, false);
    if (la.size() > cap) return out;
    if (la.empty()) {
        out.add_term(Partition{}, 1);
        out.set_exact(true);
        return out;
    }
    // distinct part values with their multiplicities in la
    std::vector<std::pair<int, int>> vals;  // (value, base multiplicity), descending value
    for (int i = 0; i < la.length(); ++i) {
        if (vals.empty() || vals.back().first != la.part(i))
            vals.push_back({la.part(i), 1});
        else
            vals.back().second++;
    }
    // enumerate target multiplicities a_j >= base_j with sum a_j * value_j <= cap
    std::vector<int> mult(vals.size());
    std::function<void(size_t, int, Int)> rec = [&](size_t idx, int degree, Int coeff) {
        if (idx == vals.size()) {
            std::vector<int> parts;
            for (size_t j = 0; j < vals.size(); ++j)
                parts.insert(parts.end(), static_cast<size_t>(mult[j]), vals[j].first);
            out.add_term(Partition(parts), Rat(coeff));
            return;
        }
        auto [value, base] = vals[idx];
        for (int a = base; degree + a * value <= cap; ++a) {
            Int f = surjections(a, base);
            mult[idx] = a;
            rec(idx + 1, degree + a * value, coeff * f);
        }
    };
    rec(0, 0, Int(1));
    return out;
}

Series k_elem_tableau(const Partition& la, int cap) {
    Series out(cap, false);
    out.add_term(Partition{}, 1);
    out.set_exact(la.empty());
    for (int i = 0; i < la.length(); ++i)
        out = multiply(out, groth_s(Partition(std::vector<int>(static_cast<size_t>(la.part(i)), 1)), cap));
    return out;
}

Series k_elem_graph(const Partition& la, int cap) {
    Series out(cap, false);
    out.add_term(Partition{}, 1);
    out.set_exact(la.empty());
    for (int i = 0; i < la.length(); ++i) {
        Series f = k_monomial(Partition(std::vector<int>(static_cast<size_t>(la.part(i)), 1)), cap);
        f *= Rat(1) / Rat(factorial(la.part(i)));
        out = multiply(out, f);
    }
    return out;
}

Series k_power(int n, int cap) {
    if (n <= 0) throw std::invalid_argument("k_power: positive index required");
    Series out(cap, false);
    for (int k = 1; n * k <= cap; ++k)
        out.add_term(Partition(std::vector<int>(static_cast<size_t>(k), n)), 1);
    return out;
}

Series family_series(BasisId b, const Partition& la, int cap) {
    static std::map<std::tuple<BasisId, Partition, int>, Series> cache;
    auto key = std::tuple<BasisId, Partition, int>{b, la, cap};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Series out(cap, false);
    switch (b) {
        case BasisId::m:
        case BasisId::mAug:
        case BasisId::e:
        case BasisId::h:
        case BasisId::p:
        case BasisId::s: out = generator(b, la, cap); break;
        case BasisId::grothS: out = groth_s(la, cap); break;
        case BasisId::dualGrothS: out = dual_groth_s(la).truncated(cap); break;
        case BasisId::kMonomial: out = k_monomial(la, cap); break;
        case BasisId::kElemTableau: out = k_elem_tableau(la, cap); break;
        case BasisId::kElemGraph: out = k_elem_graph(la, cap); break;
        case BasisId::kPower: {
            out.add_term(Partition{}, 1);
            out.set_exact(la.empty());
            for (int i = 0; i < la.length(); ++i) out = multiply(out, k_power(la.part(i), cap));
            break;
        }
    }
    cache.emplace(std::move(key), out);
    return out;
}

}  // namespace kromatic
