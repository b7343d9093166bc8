#include "kromatic/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace kromatic {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::mult(int j) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

Partition Partition::transpose() const {
    std::vector<int> t;
    for (int j = 1; j <= max_part(); ++j) {
        int c = static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                               [j](int p) { return p >= j; }));
        t.push_back(c);
    }
    return Partition(std::move(t));
}

std::vector<int> Partition::mult_vector() const {
    std::vector<int> m(static_cast<size_t>(max_part()) + 1, 0);
    for (int p : parts_) m[static_cast<size_t>(p)]++;
    m.erase(m.begin());
    return m;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool PartitionCanonicalLess::operator()(const Partition& a, const Partition& b) const {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) return {};
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int cap) {
    std::vector<Partition> out;
    for (int d = 0; d <= cap; ++d) {
        auto pd = partitions_of(d);
        out.insert(out.end(), pd.begin(), pd.end());
    }
    return out;
}

}  // namespace kromatic
