#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kromatic/numbers.hpp"
#include "kromatic/partition.hpp"
#include "kromatic/poset.hpp"

namespace kromatic {

// A cell holds either a poset element (id in 0..P.n-1) or a positive integer.
struct Cell {
    bool in_poset = false;
    int value = 0;

    bool operator==(const Cell&) const = default;
};

// Poset tableau of shape lambda: the poset cells form a subdiagram mu, rows of
// which strictly increase in P while no cell strictly exceeds the one below it.
// The remaining cells carry integers, weakly increasing along rows, strictly
// increasing down columns, with row i (1-indexed) capped at i-1. Every poset
// element must appear.
struct PTableau {
    Partition shape;
    Partition inner;
    std::vector<std::vector<Cell>> rows;
};

std::vector<PTableau> enumerate_p_tableaux(const Poset& p, const Partition& shape);

// Signed array for a permutation pi of {1..k}: row i has length
// lambda_{pi(i)} - pi(i) + i and holds a strict chain of P followed by weakly
// increasing integers below pi(i); every poset element must appear somewhere.
struct PArray {
    std::vector<int> perm;  // 0-indexed values of pi - 1
    std::vector<std::vector<Cell>> rows;
    int sign = 1;

    bool operator==(const PArray&) const = default;
};

std::vector<PArray> enumerate_p_arrays(const Poset& p, const Partition& shape);

// Position (row, col), 0-indexed, of the first defect: scanning columns left to
// right and rows bottom to top, a poset cell whose upper neighbour is absent,
// integral, or strictly above it in P, or an integer cell whose upper neighbour
// is absent or an integer not below it.
std::optional<std::pair<int, int>> find_flaw(const Poset& p, const PArray& a);

// Sign-reversing involution on flawed arrays: with the flaw at (r, c) it trades
// the tails of rows r-1 and r (shifted by one column) and swaps the two
// permutation values, negating the sign.
PArray psi(const Poset& p, const PArray& a);

struct TheoremCheck {
    Int signed_sum = 0;
    Int tableau_count = 0;
    Rat groth_coeff = 0;
    bool all_equal = false;
};

// For a (3+1)-free poset the coefficient of the dual basis element indexed by
// shape inside the Kromatic function of the incomparability graph equals the
// tableau count; the signed array sum gives the same number for any poset.
TheoremCheck verify_theorem(const Poset& p, const Partition& shape);

}  // namespace kromatic
