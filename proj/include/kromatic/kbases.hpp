#pragma once

#include "kromatic/classical.hpp"
#include "kromatic/series.hpp"

namespace kromatic {

// Set-valued filling of a Young diagram: every cell holds a nonempty set of
// positive integers; rows need max(left) <= min(right), columns max(up) < min(down).
struct SetValuedTableau {
    Partition shape;
    std::vector<std::vector<std::vector<int>>> cells;  // [row][col] -> sorted set

    int total_size() const;
};

// All semistandard set-valued tableaux with entries in [1, max_entry] and at most
// max_size entries in total.  Deterministic enumeration order.
std::vector<SetValuedTableau> enumerate_svt(const Partition& shape, int max_entry,
                                            int max_size);

// Symmetric Grothendieck function: sum over set-valued tableaux of
// (-1)^(|T| - size(shape)) x^T, truncated at cap.  Lowest part is the Schur
// function of the shape.
Series groth_s(const Partition& la, int cap);

// Dual symmetric Grothendieck function via its Jacobi-Trudi-type determinant,
// expanded over permutations of [length(la)].  Exact; top part is the Schur
// function of the shape.
Series dual_groth_s(const Partition& la);

// K-analogue of the augmented monomial: the Kromatic function of a complete graph
// with vertex weights la.  Closed form: the coefficient of m_mu is the product
// over part values j of surjections(mult_mu(j), mult_la(j)).
Series k_monomial(const Partition& la, int cap);

// K-elementary, tableau model: product of single-column Grothendieck functions.
Series k_elem_tableau(const Partition& la, int cap);

// K-elementary, clique model: product over parts n of k_monomial(1^n)/n!.
Series k_elem_graph(const Partition& la, int cap);

// K-power sum: sum over k >= 1 of m_(n^k), truncated at cap.
Series k_power(int n, int cap);

// One series per BasisId, products over parts for the multiplicative families.
// This is the family callback used by filtered expansion and the CLI.
Series family_series(BasisId b, const Partition& la, int cap);

}  // namespace kromatic
