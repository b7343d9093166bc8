#include "kromatic/series.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace kromatic {

Series::Series(int degree_cap, bool exact) : cap_(degree_cap), exact_(exact) {
    if (degree_cap < 0) throw std::invalid_argument("Series: negative degree cap");
}

Rat Series::coeff(const Partition& la) const {
    auto it = terms_.find(la);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Series::add_term(const Partition& la, const Rat& c) {
    if (la.size() > cap_ || c == 0) return;
    auto [it, inserted] = terms_.emplace(la, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Series::max_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

Series Series::degree_part(int d) const {
    Series out(cap_, exact_);
    for (const auto& [la, c] : terms_)
        if (la.size() == d) out.add_term(la, c);
    return out;
}

Series Series::truncated(int new_cap) const {
    Series out(new_cap, exact_ && max_degree() <= new_cap);
    for (const auto& [la, c] : terms_) out.add_term(la, c);
    return out;
}

// Cap bookkeeping for sums: an exact operand is known in full, so the other cap wins;
// otherwise the smaller cap does.
void Series::combine_meta(const Series& o) {
    int cap;
    bool exact;
    if (exact_ && o.exact()) {
        cap = std::max(cap_, o.degree_cap());
        exact = true;
    } else if (exact_) {
        cap = o.degree_cap();
        exact = false;
    } else if (o.exact()) {
        cap = cap_;
        exact = false;
    } else {
        cap = std::min(cap_, o.degree_cap());
        exact = false;
    }
    cap_ = cap;
    exact_ = exact;
}

Series& Series::operator+=(const Series& o) {
    combine_meta(o);
    TermMap kept;
    for (auto& [la, c] : terms_)
        if (la.size() <= cap_) kept.emplace(la, c);
    terms_ = std::move(kept);
    for (const auto& [la, c] : o.terms()) add_term(la, c);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    combine_meta(o);
    TermMap kept;
    for (auto& [la, c] : terms_)
        if (la.size() <= cap_) kept.emplace(la, c);
    terms_ = std::move(kept);
    for (const auto& [la, c] : o.terms()) add_term(la, Rat(-c));
    return *this;
}

Series& Series::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [la, v] : terms_) v *= c;
    return *this;
}

namespace {

// Sparse polynomial in a fixed number of variables, used to multiply m-forms.
using Expo = std::vector<uint8_t>;

void expand_into(const Series& f, int nvars, int cap, std::map<Expo, Rat>& poly) {
    for (const auto& [la, c] : f.terms()) {
        if (la.length() > nvars || la.size() > cap) continue;
        Expo e(static_cast<size_t>(nvars), 0);
        for (int i = 0; i < la.length(); ++i) e[static_cast<size_t>(i)] = static_cast<uint8_t>(la.part(i));
        // descending start enumerates every distinct arrangement via prev_permutation
        std::sort(e.begin(), e.end(), std::greater<uint8_t>());
        do {
            poly[e] += c;
        } while (std::prev_permutation(e.begin(), e.end(), std::less<uint8_t>()));
    }
}

bool is_leading(const Expo& e) {
    for (size_t i = 1; i < e.size(); ++i)
        if (e[i] > e[i - 1]) return false;
    return true;
}

}  // namespace

Series multiply(const Series& f, const Series& g) {
    int cap = std::min(f.degree_cap(), g.degree_cap());
    bool exact = f.exact() && g.exact() && f.max_degree() + g.max_degree() <= cap;
    Series out(cap, exact);
    if (f.is_zero() || g.is_zero()) return out;

    int lf = 0, lg = 0;
    for (const auto& [la, c] : f.terms()) lf = std::max(lf, la.length());
    for (const auto& [la, c] : g.terms()) lg = std::max(lg, la.length());
    int nvars = std::min(cap, lf + lg);
    if (nvars == 0) {
        // both operands are constants
        out.add_term(Partition{}, f.coeff(Partition{}) * g.coeff(Partition{}));
        return out;
    }

    std::map<Expo, Rat> pf, pg;
    expand_into(f, nvars, cap, pf);
    expand_into(g, nvars, cap, pg);

    std::map<Expo, Rat> prod;
    for (const auto& [ea, ca] : pf) {
        int da = 0;
        for (auto v : ea) da += v;
        for (const auto& [eb, cb] : pg) {
            int d = da;
            for (auto v : eb) d += v;
            if (d > cap) continue;
            Expo e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = static_cast<uint8_t>(ea[i] + eb[i]);
            prod[e] += ca * cb;
        }
    }
    for (const auto& [e, c] : prod) {
        if (c == 0 || !is_leading(e)) continue;
        std::vector<int> parts;
        for (auto v : e)
            if (v) parts.push_back(v);
        out.add_term(Partition(std::move(parts)), c);
    }
    return out;
}

}  // namespace kromatic
