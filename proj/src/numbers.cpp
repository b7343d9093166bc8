#include "kromatic/numbers.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace kromatic {

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int multichoose(int n, int k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n <= 0) return 0;
    return binomial(n + k - 1, k);
}

Int stirling2(int n, int k) {
    if (n < 0 || k < 0) return 0;
    if (n == 0 && k == 0) return 1;
    if (n == 0 || k == 0 || k > n) return 0;
    static std::map<std::pair<int, int>, Int> cache;
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    Int v = stirling2(n - 1, k - 1) + k * stirling2(n - 1, k);
    cache.emplace(std::pair<int, int>{n, k}, v);
    return v;
}

Int surjections(int a, int b) {
    return factorial(b) * stirling2(a, b);
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace kromatic
