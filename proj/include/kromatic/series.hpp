#pragma once

#include <map>

#include "kromatic/numbers.hpp"
#include "kromatic/partition.hpp"

namespace kromatic {

// Symmetric function in the canonical monomial form, truncated above degree_cap.
// Terms index m_lambda; zero coefficients are never stored.  `exact` promises the
// underlying element has no terms above the cap, i.e. nothing was dropped.
class Series {
  public:
    using TermMap = std::map<Partition, Rat, PartitionCanonicalLess>;

    explicit Series(int degree_cap, bool exact = false);

    int degree_cap() const { return cap_; }
    bool exact() const { return exact_; }
    void set_exact(bool e) { exact_ = e; }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Partition& la) const;

    // Ignores terms above the cap; erases entries that cancel to zero.
    void add_term(const Partition& la, const Rat& c);

    // Largest degree with a stored term (0 when empty).
    int max_degree() const;

    Series degree_part(int d) const;
    Series truncated(int new_cap) const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Rat& c);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Rat& c) { return a *= c; }

    bool operator==(const Series& o) const { return terms_ == o.terms_; }

  private:
    void combine_meta(const Series& o);

    int cap_;
    bool exact_;
    TermMap terms_;
};

// Truncated product.  Result cap = min of the caps; exact only when both operands
// are exact and the full product fits under that cap.
Series multiply(const Series& f, const Series& g);

}  // namespace kromatic
