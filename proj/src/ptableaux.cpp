#include "kromatic/ptableaux.hpp"

#include <algorithm>
#include <stdexcept>

#include "kromatic/engines.hpp"

namespace kromatic {
namespace {

struct TabCtx {
    const Poset& p;
    const Partition& shape;
    int k;
    std::vector<int> mu;
    std::vector<std::vector<Cell>> rows;
    std::vector<int> used;
    std::vector<PTableau>* out;
};

void emit_tableau(TabCtx& c) {
    std::vector<int> inner;
    for (int m : c.mu)
        if (m > 0) inner.push_back(m);
    c.out->push_back(PTableau{c.shape, Partition(inner), c.rows});
}

// Integer cells, row-major: weakly increasing along the row, strictly
// increasing below an integer cell, at most i in row i (0-indexed).
void fill_ints(TabCtx& c, int i, int j) {
    if (i == c.k) {
        emit_tableau(c);
        return;
    }
    if (j == c.shape.part(i)) {
        int ni = i + 1;
        fill_ints(c, ni, ni < c.k ? c.mu[ni] : 0);
        return;
    }
    int lo = 1;
    if (j > c.mu[i]) lo = std::max(lo, c.rows[i][j - 1].value);
    if (i > 0 && j >= c.mu[i - 1]) lo = std::max(lo, c.rows[i - 1][j].value + 1);
    for (int v = lo; v <= i; ++v) {
        c.rows[i][j] = Cell{false, v};
        fill_ints(c, i, j + 1);
    }
}

// Poset cells, row-major over the subdiagram mu: rows strictly increase in P,
// and no cell lies strictly above the one directly over it.
void fill_poset(TabCtx& c, int i, int j) {
    if (i == c.k) {
        for (int e = 0; e < c.p.n; ++e)
            if (c.used[e] == 0) return;
        fill_ints(c, 0, c.mu[0]);
        return;
    }
    if (j == c.mu[i]) {
        fill_poset(c, i + 1, 0);
        return;
    }
    for (int e = 0; e < c.p.n; ++e) {
        if (j > 0 && !c.p.less(c.rows[i][j - 1].value, e)) continue;
        if (i > 0 && c.p.less(e, c.rows[i - 1][j].value)) continue;
        c.rows[i][j] = Cell{true, e};
        ++c.used[e];
        fill_poset(c, i, j + 1);
        --c.used[e];
    }
}

void choose_inner(TabCtx& c, int i, int cells) {
    if (i == c.k) {
        if (cells >= c.p.n) fill_poset(c, 0, 0);
        return;
    }
    int hi = std::min<int>(c.mu[i - 1], c.shape.part(i));
    for (int m = 0; m <= hi; ++m) {
        c.mu[i] = m;
        choose_inner(c, i + 1, cells + m);
    }
}

}  // namespace

std::vector<PTableau> enumerate_p_tableaux(const Poset& p, const Partition& shape) {
    std::vector<PTableau> out;
    int k = static_cast<int>(shape.length());
    if (k == 0) {
        if (p.n == 0) out.push_back(PTableau{shape, Partition{}, {}});
        return out;
    }
    TabCtx c{p, shape, k, std::vector<int>(k), {}, std::vector<int>(p.n), &out};
    c.rows.resize(k);
    for (int i = 0; i < k; ++i) c.rows[i].resize(shape.part(i));
    c.mu[0] = shape.part(0);  // the first row admits no integer entries
    choose_inner(c, 1, c.mu[0]);
    return out;
}

namespace {

struct ArrCtx {
    const Poset& p;
    int k;
    std::vector<int> perm;
    std::vector<int> len;
    std::vector<std::vector<Cell>> rows;
    std::vector<int> used;
    int sign;
    std::vector<PArray>* out;
};

// Row content: strict chain of P, then weakly increasing integers below the
// permutation value for that row.
void arr_row(ArrCtx& c, int i, int j, bool chain, int last) {
    if (i == c.k) {
        for (int e = 0; e < c.p.n; ++e)
            if (c.used[e] == 0) return;
        c.out->push_back(PArray{c.perm, c.rows, c.sign});
        return;
    }
    if (j == c.len[i]) {
        arr_row(c, i + 1, 0, true, -1);
        return;
    }
    if (chain) {
        for (int e = 0; e < c.p.n; ++e) {
            if (j > 0 && !c.p.less(last, e)) continue;
            c.rows[i][j] = Cell{true, e};
            ++c.used[e];
            arr_row(c, i, j + 1, true, e);
            --c.used[e];
        }
    }
    int lo = chain ? 1 : last;
    for (int v = lo; v <= c.perm[i]; ++v) {
        c.rows[i][j] = Cell{false, v};
        arr_row(c, i, j + 1, false, v);
    }
}

int parity(const std::vector<int>& perm) {
    int inv = 0;
    for (size_t a = 0; a < perm.size(); ++a)
        for (size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

std::vector<PArray> enumerate_p_arrays(const Poset& p, const Partition& shape) {
    std::vector<PArray> out;
    int k = static_cast<int>(shape.length());
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    do {
        std::vector<int> len(k);
        bool ok = true;
        for (int i = 0; i < k; ++i) {
            len[i] = static_cast<int>(shape.part(perm[i])) - perm[i] + i;
            if (len[i] < 0) ok = false;
        }
        if (!ok) continue;
        ArrCtx c{p, k, perm, len, {}, std::vector<int>(p.n), parity(perm), &out};
        c.rows.resize(k);
        for (int i = 0; i < k; ++i) c.rows[i].resize(len[i]);
        arr_row(c, 0, 0, true, -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::optional<std::pair<int, int>> find_flaw(const Poset& p, const PArray& a) {
    int k = static_cast<int>(a.rows.size());
    size_t width = 0;
    for (const auto& row : a.rows) width = std::max(width, row.size());
    for (size_t c = 0; c < width; ++c) {
        for (int i = k - 1; i >= 1; --i) {
            if (c >= a.rows[i].size()) continue;
            const Cell& cur = a.rows[i][c];
            bool has_up = c < a.rows[i - 1].size();
            bool flaw;
            if (cur.in_poset) {
                flaw = !has_up || !a.rows[i - 1][c].in_poset ||
                       p.less(cur.value, a.rows[i - 1][c].value);
            } else {
                flaw = !has_up || (!a.rows[i - 1][c].in_poset &&
                                   cur.value <= a.rows[i - 1][c].value);
            }
            if (flaw) return std::pair<int, int>(i, static_cast<int>(c));
        }
    }
    return std::nullopt;
}

PArray psi(const Poset& p, const PArray& a) {
    auto fl = find_flaw(p, a);
    if (!fl) throw std::invalid_argument("psi: array has no flaw");
    auto [r, c] = *fl;
    const auto& hi = a.rows[r - 1];
    const auto& lo = a.rows[r];
    if (static_cast<int>(hi.size()) < c || static_cast<int>(lo.size()) < c + 1)
        throw std::logic_error("psi: flaw too far right for the tail swap");
    PArray b = a;
    b.rows[r - 1].assign(hi.begin(), hi.begin() + c);
    b.rows[r - 1].insert(b.rows[r - 1].end(), lo.begin() + c + 1, lo.end());
    b.rows[r].assign(lo.begin(), lo.begin() + c + 1);
    b.rows[r].insert(b.rows[r].end(), hi.begin() + c, hi.end());
    std::swap(b.perm[r - 1], b.perm[r]);
    b.sign = -a.sign;
    return b;
}

TheoremCheck verify_theorem(const Poset& p, const Partition& shape) {
    TheoremCheck res;
    for (const PArray& a : enumerate_p_arrays(p, shape)) res.signed_sum += a.sign;
    res.tableau_count = static_cast<long>(enumerate_p_tableaux(p, shape).size());
    int cap = static_cast<int>(shape.size());
    Series f(cap, true);
    if (p.n == 0) {
        f.add_term(Partition{}, 1);
    } else {
        WeightedGraph wg(incomparability_graph(p));
        f = realize_expansion(kromatic_covers_truncated(wg, cap), cap);
    }
    res.groth_coeff = groth_coefficient(f, shape);
    res.all_equal = res.signed_sum == res.tableau_count &&
                    Rat(res.signed_sum) == res.groth_coeff;
    return res;
}

}  // namespace kromatic
