#pragma once

#include <map>
#include <vector>

#include "kromatic/graph.hpp"
#include "kromatic/kbases.hpp"
#include "kromatic/series.hpp"

namespace kromatic {

// Finite expansion over the K-analogue of the augmented monomial basis; the
// coefficient of la counts stable-set covers with weight multiset la.
using Expansion = std::map<Partition, Int, PartitionCanonicalLess>;

// Chromatic symmetric function (weighted), via stable partitions of the vertex
// set; homogeneous of degree total_weight, so exact whenever it fits the cap.
Series chromatic_sym(const WeightedGraph& wg, int cap);

// Reference engine: enumerate proper set colorings with colors in [1, cap] and
// weighted color budget <= cap, then read off leading monomials.
Series kromatic_direct(const WeightedGraph& wg, int cap);

// Cover engine.  Counts stable-set covers per weight multiset by inclusion-
// exclusion over the covered vertex set, which matches direct cover enumeration
// but stays polynomial in the number of stable sets.
Expansion kromatic_covers(const WeightedGraph& wg);

// Same, keeping only multisets of total weight <= max_size.
Expansion kromatic_covers_truncated(const WeightedGraph& wg, int max_size);

// Recursive engine over the five-graph relation at a nonedge, complete graphs as
// base case.  Nonedge choice: lexicographically smallest; memoized on canonical
// forms up to 8 vertices.
Expansion kromatic_delcon(const WeightedGraph& wg);

// Same, but the first step uses the given nonedge (recursive steps pick smallest).
Expansion kromatic_delcon_at(const WeightedGraph& wg, int v, int w);

// Sum of coeff * k_monomial(la) over the expansion, truncated at cap.
Series realize_expansion(const Expansion& ex, int cap);

// Coefficient of the symmetric Grothendieck function indexed by la, obtained by
// pairing f against the dual Grothendieck function.  Needs f.degree_cap >= size(la).
Rat groth_coefficient(const Series& f, const Partition& la);

// Signed counts of stable-set weight histograms over vertex subsets.  Two graphs
// have equal cover expansions iff these maps are equal, which keeps large-graph
// comparisons cheap.
std::map<std::vector<int>, long long> stable_profile(const WeightedGraph& wg);

bool kromatic_equal(const WeightedGraph& a, const WeightedGraph& b);

}  // namespace kromatic
