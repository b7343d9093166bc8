#include "kromatic/classical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace kromatic {

std::optional<BasisId> basis_from_string(const std::string& s) {
    if (s == "m") return BasisId::m;
    if (s == "maug") return BasisId::mAug;
    if (s == "e") return BasisId::e;
    if (s == "h") return BasisId::h;
    if (s == "p") return BasisId::p;
    if (s == "s") return BasisId::s;
    if (s == "gs") return BasisId::grothS;
    if (s == "gsd") return BasisId::dualGrothS;
    if (s == "km") return BasisId::kMonomial;
    if (s == "ket") return BasisId::kElemTableau;
    if (s == "keg") return BasisId::kElemGraph;
    if (s == "kp") return BasisId::kPower;
    return std::nullopt;
}

std::string basis_to_string(BasisId b) {
    switch (b) {
        case BasisId::m: return "m";
        case BasisId::mAug: return "maug";
        case BasisId::e: return "e";
        case BasisId::h: return "h";
        case BasisId::p: return "p";
        case BasisId::s: return "s";
        case BasisId::grothS: return "gs";
        case BasisId::dualGrothS: return "gsd";
        case BasisId::kMonomial: return "km";
        case BasisId::kElemTableau: return "ket";
        case BasisId::kElemGraph: return "keg";
        case BasisId::kPower: return "kp";
    }
    return "?";
}

bool is_classical(BasisId b) {
    switch (b) {
        case BasisId::m:
        case BasisId::mAug:
        case BasisId::e:
        case BasisId::h:
        case BasisId::p:
        case BasisId::s: return true;
        default: return false;
    }
}

namespace {

// Semistandard tableaux of the given shape with entries in [1, nvals]; counts by
// content give the Kostka coefficients.
void ssyt_count(const Partition& shape, int nvals,
                std::map<std::vector<int>, Int>& by_content) {
    int rows = shape.length();
    std::vector<std::vector<int>> t(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) t[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.part(i)), 0);
    std::vector<int> content(static_cast<size_t>(nvals), 0);

    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == rows) {
            by_content[content]++;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == shape.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);       // weakly increase along rows
        if (r > 0 && c < shape.part(r - 1)) lo = std::max(lo, t[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);  // strictly down columns
        for (int v = lo; v <= nvals; ++v) {
            t[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            content[static_cast<size_t>(v - 1)]++;
            fill(nr, nc);
            content[static_cast<size_t>(v - 1)]--;
        }
    };
    fill(0, 0);
}

bool is_partition_vector(const std::vector<int>& v, std::vector<int>& compact) {
    compact.clear();
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0 && v[i] > v[i - 1]) return false;
        if (v[i] == 0) {
            for (size_t j = i; j < v.size(); ++j)
                if (v[j] != 0) return false;
            break;
        }
        compact.push_back(v[i]);
    }
    return true;
}

Series schur_m_form(const Partition& la, int cap) {
    Series out(cap, true);
    if (la.empty()) {
        out.add_term(Partition{}, 1);
        return out;
    }
    std::map<std::vector<int>, Int> by_content;
    ssyt_count(la, la.size(), by_content);
    std::vector<int> compact;
    for (const auto& [content, count] : by_content) {
        if (!is_partition_vector(content, compact)) continue;
        out.add_term(Partition(compact), Rat(count));
    }
    return out;
}

Series generator_uncached(BasisId b, const Partition& la, int cap) {
    Series out(cap, true);
    switch (b) {
        case BasisId::m:
            out.add_term(la, 1);
            return out;
        case BasisId::mAug: {
            Rat norm(1);
            for (int j = 1; j <= la.max_part(); ++j)
                if (int r = la.mult(j); r > 1) norm *= Rat(factorial(r));
            out.add_term(la, norm);
            return out;
        }
        case BasisId::e: {
            out.add_term(Partition{}, 1);
            for (int i = 0; i < la.length(); ++i) {
                Series f(cap, true);
                f.add_term(Partition(std::vector<int>(static_cast<size_t>(la.part(i)), 1)), 1);
                out = multiply(out, f);
            }
            return out;
        }
        case BasisId::h: {
            out.add_term(Partition{}, 1);
            for (int i = 0; i < la.length(); ++i) {
                Series f(cap, true);
                for (const auto& mu : partitions_of(la.part(i))) f.add_term(mu, 1);
                out = multiply(out, f);
            }
            return out;
        }
        case BasisId::p: {
            out.add_term(Partition{}, 1);
            for (int i = 0; i < la.length(); ++i) {
                Series f(cap, true);
                f.add_term(Partition({la.part(i)}), 1);
                out = multiply(out, f);
            }
            return out;
        }
        case BasisId::s: return schur_m_form(la, cap);
        default: throw std::invalid_argument("generator: not a classical basis");
    }
}

}  // namespace

Series generator(BasisId b, const Partition& la, int cap) {
    if (!is_classical(b)) throw std::invalid_argument("generator: not a classical basis");
    if (la.size() > cap) return Series(cap, false);
    static std::map<std::tuple<BasisId, Partition, int>, Series> cache;
    auto key = std::tuple<BasisId, Partition, int>{b, la, cap};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Series out = generator_uncached(b, la, cap);
    cache.emplace(std::move(key), out);
    return out;
}

namespace {

// Exact dense linear solve over Rat (Gaussian elimination with nonzero pivot search).
// a is square, b the right-hand side; returns x with a x = b.  Throws if singular.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::runtime_error("solve_linear: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Rat inv = 1 / a[col][col];
        for (size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    return b;
}

}  // namespace

Coeffs convert_classical(const Series& f, BasisId target) {
    if (!is_classical(target)) throw std::invalid_argument("convert_classical: classical targets only");
    Coeffs out;
    for (int d = 0; d <= f.degree_cap(); ++d) {
        auto mus = partitions_of(d);
        size_t n = mus.size();
        std::vector<Rat> rhs(n, Rat(0));
        bool any = false;
        for (size_t j = 0; j < n; ++j) {
            rhs[j] = f.coeff(mus[j]);
            if (rhs[j] != 0) any = true;
        }
        if (!any) continue;
        // column k of the system is basis element mu_k expressed in m
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
        for (size_t k = 0; k < n; ++k) {
            Series bk = generator(target, mus[k], d);
            for (size_t j = 0; j < n; ++j) a[j][k] = bk.coeff(mus[j]);
        }
        auto x = solve_linear(std::move(a), std::move(rhs));
        for (size_t k = 0; k < n; ++k)
            if (x[k] != 0) out.emplace(mus[k], x[k]);
    }
    return out;
}

Rat hall_inner(const Series& f, const Series& g) {
    const Series* ex = nullptr;
    const Series* other = nullptr;
    if (f.exact()) {
        ex = &f;
        other = &g;
    } else if (g.exact()) {
        ex = &g;
        other = &f;
    } else {
        throw std::invalid_argument("hall_inner: at least one operand must be exact");
    }
    if (ex->max_degree() > other->degree_cap())
        throw std::invalid_argument("hall_inner: cap too small for the exact operand");
    // <h_la, m_mu> = delta, so pair the h-coefficients of one side with the
    // m-coefficients of the other.
    Coeffs hcoeffs = convert_classical(*ex, BasisId::h);
    Rat acc(0);
    for (const auto& [la, c] : hcoeffs) acc += c * other->coeff(la);
    return acc;
}

Coeffs expand_filtered(const Series& f,
                       const std::function<Series(const Partition&, int)>& family) {
    int cap = f.degree_cap();
    Series rem = f;
    Coeffs out;
    for (int d = 0; d <= cap; ++d) {
        for (const auto& [la, c] : rem.terms())
            if (la.size() < d)
                throw std::runtime_error("expand_filtered: family not triangular at degree " +
                                         std::to_string(d));
        auto mus = partitions_of(d);
        size_t n = mus.size();
        std::vector<Rat> rhs(n, Rat(0));
        bool any = false;
        for (size_t j = 0; j < n; ++j) {
            rhs[j] = rem.coeff(mus[j]);
            if (rhs[j] != 0) any = true;
        }
        if (!any) continue;
        std::vector<Series> members(n, Series(0));
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
        for (size_t k = 0; k < n; ++k) {
            members[k] = family(mus[k], cap);
            for (size_t j = 0; j < n; ++j) a[j][k] = members[k].coeff(mus[j]);
        }
        auto x = solve_linear(std::move(a), std::move(rhs));
        for (size_t k = 0; k < n; ++k) {
            if (x[k] == 0) continue;
            out.emplace(mus[k], x[k]);
            Series scaled = members[k];
            scaled *= x[k];
            rem -= scaled;
        }
    }
    for (const auto& [la, c] : rem.terms())
        if (la.size() <= cap)
            throw std::runtime_error("expand_filtered: nonzero remainder at the cap");
    return out;
}

}  // namespace kromatic
