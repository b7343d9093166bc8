#pragma once

#include <compare>
#include <string>
#include <vector>

namespace kromatic {

// Integer partition: weakly decreasing positive parts; the empty partition is allowed.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // Sorts descending first; every entry must still be positive.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;    // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }  // 0-indexed
    int mult(int j) const;                                            // multiplicity of part value j
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
    Partition transpose() const;

    // Product of mult(j)! over part values, the normalizer relating m to the augmented basis.
    std::vector<int> mult_vector() const;  // mult of 1..max_part

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;  // plain lex on parts, for generic use

    std::string to_string() const;  // "(3,1,1)"; "()" for empty

  private:
    std::vector<int> parts_;
};

// Canonical term order: ascending size, ties by descending lexicographic parts.
// Within one degree this puts (d) first and (1^d) last.
struct PartitionCanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

// All partitions of n, in descending lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

// All partitions of size <= cap, in canonical order.
std::vector<Partition> partitions_up_to(int cap);

}  // namespace kromatic
