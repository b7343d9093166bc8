#pragma once

#include <functional>
#include <optional>
#include <string>

#include "kromatic/series.hpp"

namespace kromatic {

enum class BasisId {
    m,             // monomial
    mAug,          // augmented monomial
    e,             // elementary
    h,             // complete homogeneous
    p,             // power sum
    s,             // Schur
    grothS,        // symmetric Grothendieck
    dualGrothS,    // dual symmetric Grothendieck
    kMonomial,     // K-analogue of the augmented monomial
    kElemTableau,  // K-elementary, tableau model
    kElemGraph,    // K-elementary, clique model
    kPower,        // K-power sum
};

std::optional<BasisId> basis_from_string(const std::string& s);
std::string basis_to_string(BasisId b);
bool is_classical(BasisId b);  // one of m, mAug, e, h, p, s

// m-form of a classical basis element, exact; empty inexact series when size(la) > cap.
Series generator(BasisId b, const Partition& la, int cap);

using Coeffs = std::map<Partition, Rat, PartitionCanonicalLess>;

// Coefficients of f on a classical basis, one exact linear solve per degree.
// Valid per-degree because the target bases are homogeneous.
Coeffs convert_classical(const Series& f, BasisId target);

// Hall inner product.  At least one operand must be exact, and the other's cap must
// reach the exact operand's top degree.
Rat hall_inner(const Series& f, const Series& g);

// Expansion of f over a filtered family b(la) whose lowest-degree parts form a
// homogeneous basis degree by degree.  Layered elimination from degree 0 up to
// f's cap; throws if a layer leaves a remainder below the current degree.
Coeffs expand_filtered(const Series& f,
                       const std::function<Series(const Partition&, int)>& family);

}  // namespace kromatic
