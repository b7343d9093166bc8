#include "doctest.h"

#include <vector>

#include "kromatic/partition.hpp"
#include "kromatic/series.hpp"

using namespace kromatic;

TEST_CASE("partition basics") {
    Partition la = Partition::from_unsorted({1, 3, 2, 3});
    CHECK(la.parts() == std::vector<int>{3, 3, 2, 1});
    CHECK(la.size() == 9);
    CHECK(la.length() == 4);
    CHECK(la.max_part() == 3);
    CHECK(la.mult(3) == 2);
    CHECK(la.mult(2) == 1);
    CHECK(la.mult(5) == 0);

    CHECK(Partition{}.empty());
    CHECK(Partition{}.size() == 0);
    CHECK_THROWS(Partition({2, 3}));          // not weakly decreasing
    CHECK_THROWS(Partition::from_unsorted({1, 0}));
}

TEST_CASE("transpose") {
    CHECK(Partition({3, 1}).transpose() == Partition({2, 1, 1}));
    CHECK(Partition({2, 2}).transpose() == Partition({2, 2}));
    CHECK(Partition{}.transpose() == Partition{});
    for (const auto& la : partitions_of(6)) CHECK(la.transpose().transpose() == la);
}

TEST_CASE("partition counts") {
    const int expect[] = {1, 1, 2, 3, 5, 7, 11, 15};
    for (int n = 0; n <= 7; ++n) CHECK(partitions_of(n).size() == size_t(expect[n]));
}

TEST_CASE("canonical order: ascending size, descending lex inside a size") {
    PartitionCanonicalLess lt;
    CHECK(lt(Partition({2}), Partition({1, 1, 1})));   // smaller size first
    CHECK(lt(Partition({3}), Partition({2, 1})));      // same size: lex-larger first
    CHECK(lt(Partition({2, 1}), Partition({1, 1, 1})));
    CHECK(!lt(Partition({1, 1}), Partition({2})));
    CHECK(!lt(Partition({3}), Partition({3})));
}

TEST_CASE("series term handling") {
    Series f(4);
    f.add_term(Partition({2, 1}), 3);
    f.add_term(Partition({2, 1}), -3);
    CHECK(f.is_zero());               // cancelled terms are erased

    f.add_term(Partition({1, 1, 1, 1, 1}), 7);
    CHECK(f.is_zero());               // above the cap: ignored

    f.add_term(Partition({3}), Rat(1, 2));
    CHECK(f.coeff(Partition({3})) == Rat(1, 2));
    CHECK(f.coeff(Partition({2, 1})) == 0);
    CHECK(f.max_degree() == 3);
}

TEST_CASE("series arithmetic and slicing") {
    Series f(5, true);
    f.add_term(Partition({1}), 1);
    f.add_term(Partition({2, 1}), 2);
    Series g(5, true);
    g.add_term(Partition({2, 1}), -2);

    Series sum = f + g;
    CHECK(sum.coeff(Partition({1})) == 1);
    CHECK(sum.coeff(Partition({2, 1})) == 0);

    Series part = f.degree_part(3);
    CHECK(part.coeff(Partition({2, 1})) == 2);
    CHECK(part.coeff(Partition({1})) == 0);

    Series cut = f.truncated(2);
    CHECK(cut.degree_cap() == 2);
    CHECK(cut.coeff(Partition({1})) == 1);
    CHECK(cut.coeff(Partition({2, 1})) == 0);

    Series scaled = f * Rat(1, 3);
    CHECK(scaled.coeff(Partition({2, 1})) == Rat(2, 3));
}

TEST_CASE("multiply matches hand expansion") {
    // m_1 * m_1 = m_2 + 2 m_11
    Series m1(4, true);
    m1.add_term(Partition({1}), 1);
    Series sq = multiply(m1, m1);
    CHECK(sq.coeff(Partition({2})) == 1);
    CHECK(sq.coeff(Partition({1, 1})) == 2);

    // m_11 * m_1 = m_21 + 3 m_111  (e_2 e_1 = e_21)
    Series m11(4, true);
    m11.add_term(Partition({1, 1}), 1);
    Series e21 = multiply(m11, m1);
    CHECK(e21.coeff(Partition({2, 1})) == 1);
    CHECK(e21.coeff(Partition({1, 1, 1})) == 3);

    // m_2 * m_2 = m_4 + 2 m_22
    Series m2(4, true);
    m2.add_term(Partition({2}), 1);
    Series p22 = multiply(m2, m2);
    CHECK(p22.coeff(Partition({4})) == 1);
    CHECK(p22.coeff(Partition({2, 2})) == 2);
    CHECK(p22.coeff(Partition({3, 1})) == 0);
}

TEST_CASE("multiply cap and exactness") {
    Series f(2, true);
    f.add_term(Partition({2}), 1);
    Series g(3, true);
    g.add_term(Partition({1}), 1);

    Series prod = multiply(f, g);
    CHECK(prod.degree_cap() == 2);    // min of the operand caps
    CHECK(prod.is_zero());            // degree-3 product falls above it
    CHECK(!prod.exact());

    Series a(6, true);
    a.add_term(Partition({2}), 1);
    Series b(6, true);
    b.add_term(Partition({1}), 1);
    Series ab = multiply(a, b);
    CHECK(ab.exact());                // full product fits under the cap
    CHECK(ab.coeff(Partition({3})) == 1);
    CHECK(ab.coeff(Partition({2, 1})) == 1);
}
