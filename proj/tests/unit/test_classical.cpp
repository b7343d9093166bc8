#include "doctest.h"

#include <random>
#include <vector>

#include "kromatic/classical.hpp"
#include "kromatic/series.hpp"

using namespace kromatic;

namespace {

Series from_coeffs(BasisId b, const Coeffs& coeffs, int cap) {
    Series out(cap, true);
    for (const auto& [la, c] : coeffs) out += generator(b, la, cap) * c;
    return out;
}

}  // namespace

TEST_CASE("basis id round-trip") {
    for (const char* name : {"m", "maug", "e", "h", "p", "s", "gs", "gsd", "km", "ket", "keg", "kp"}) {
        auto b = basis_from_string(name);
        REQUIRE(b.has_value());
        CHECK(basis_to_string(*b) == name);
    }
    CHECK(!basis_from_string("zz").has_value());
    CHECK(is_classical(BasisId::p));
    CHECK(!is_classical(BasisId::kMonomial));
}

TEST_CASE("generator anchors in monomial form") {
    CHECK(generator(BasisId::m, Partition({2, 1}), 4).coeff(Partition({2, 1})) == 1);
    CHECK(generator(BasisId::m, Partition({2, 1}), 4).terms().size() == 1);

    // augmented monomial scales by the product of multiplicity factorials
    CHECK(generator(BasisId::mAug, Partition({2, 2}), 4).coeff(Partition({2, 2})) == 2);
    CHECK(generator(BasisId::mAug, Partition({1, 1, 1}), 3).coeff(Partition({1, 1, 1})) == 6);

    Series e21 = generator(BasisId::e, Partition({2, 1}), 3);
    CHECK(e21.coeff(Partition({2, 1})) == 1);
    CHECK(e21.coeff(Partition({1, 1, 1})) == 3);
    CHECK(e21.coeff(Partition({3})) == 0);
    CHECK(generator(BasisId::e, Partition({3}), 3).coeff(Partition({1, 1, 1})) == 1);

    Series h2 = generator(BasisId::h, Partition({2}), 2);
    CHECK(h2.coeff(Partition({2})) == 1);
    CHECK(h2.coeff(Partition({1, 1})) == 1);

    Series p21 = generator(BasisId::p, Partition({2, 1}), 3);
    CHECK(p21.coeff(Partition({3})) == 1);
    CHECK(p21.coeff(Partition({2, 1})) == 1);
    CHECK(p21.coeff(Partition({1, 1, 1})) == 0);

    // Kostka numbers: s_21 = m_21 + 2 m_111, s_22 = m_22 + m_211 + 2 m_1111
    Series s21 = generator(BasisId::s, Partition({2, 1}), 3);
    CHECK(s21.coeff(Partition({2, 1})) == 1);
    CHECK(s21.coeff(Partition({1, 1, 1})) == 2);
    Series s22 = generator(BasisId::s, Partition({2, 2}), 4);
    CHECK(s22.coeff(Partition({2, 2})) == 1);
    CHECK(s22.coeff(Partition({2, 1, 1})) == 1);
    CHECK(s22.coeff(Partition({1, 1, 1, 1})) == 2);
    CHECK(s22.coeff(Partition({3, 1})) == 0);
}

TEST_CASE("schur orthonormality and hall pairing anchors") {
    for (int a = 0; a <= 4; ++a)
        for (const auto& la : partitions_of(a))
            for (int b = 0; b <= 4; ++b)
                for (const auto& mu : partitions_of(b)) {
                    Rat got = hall_inner(generator(BasisId::s, la, 4),
                                         generator(BasisId::s, mu, 4));
                    CHECK(got == (la == mu ? 1 : 0));
                }

    // <h_la, m_mu> = delta
    CHECK(hall_inner(generator(BasisId::h, Partition({2, 1}), 3),
                     generator(BasisId::m, Partition({2, 1}), 3)) == 1);
    CHECK(hall_inner(generator(BasisId::h, Partition({2, 1}), 3),
                     generator(BasisId::m, Partition({1, 1, 1}), 3)) == 0);

    // <p_2, m_11> = -1 since p_2 = 2 h_2 - h_11
    CHECK(hall_inner(generator(BasisId::p, Partition({2}), 2),
                     generator(BasisId::m, Partition({1, 1}), 2)) == -1);

    // <p_la, p_la> = z_la
    CHECK(hall_inner(generator(BasisId::p, Partition({3}), 3),
                     generator(BasisId::p, Partition({3}), 3)) == 3);
    CHECK(hall_inner(generator(BasisId::p, Partition({2, 1}), 3),
                     generator(BasisId::p, Partition({2, 1}), 3)) == 2);
    CHECK(hall_inner(generator(BasisId::p, Partition({1, 1, 1}), 3),
                     generator(BasisId::p, Partition({1, 1, 1}), 3)) == 6);
}

TEST_CASE("convert_classical inverts the generators") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), pick(0, 2);
    const int cap = 5;

    Series f(cap, true);
    for (int d = 0; d <= cap; ++d)
        for (const auto& la : partitions_of(d))
            if (pick(rng) == 0) {
                Rat c(num(rng), den(rng));
                c.canonicalize();
                f.add_term(la, c);
            }

    for (BasisId b : {BasisId::m, BasisId::mAug, BasisId::e, BasisId::h, BasisId::p, BasisId::s}) {
        Coeffs coeffs = convert_classical(f, b);
        CHECK(from_coeffs(b, coeffs, cap) == f);
    }
}

TEST_CASE("convert_classical matches known expansions") {
    // e_21 = s_21 + s_111 and h_21 = s_21 + s_3
    Coeffs se = convert_classical(generator(BasisId::e, Partition({2, 1}), 3), BasisId::s);
    CHECK(se[Partition({2, 1})] == 1);
    CHECK(se[Partition({1, 1, 1})] == 1);
    CHECK(se.count(Partition({3})) == 0);

    Coeffs sh = convert_classical(generator(BasisId::h, Partition({2, 1}), 3), BasisId::s);
    CHECK(sh[Partition({2, 1})] == 1);
    CHECK(sh[Partition({3})] == 1);
}

TEST_CASE("expand_filtered agrees with convert_classical on homogeneous families") {
    Series f(4, true);
    f.add_term(Partition({2, 1}), 3);
    f.add_term(Partition({1, 1}), Rat(1, 2));
    f.add_term(Partition({4}), -2);

    auto gen_e = [](const Partition& la, int cap) { return generator(BasisId::e, la, cap); };
    CHECK(expand_filtered(f, gen_e) == convert_classical(f, BasisId::e));
}
