#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kromatic/graph.hpp"

namespace kromatic {

// Finite poset on elements 0..n-1; the strict relation is stored transitively closed.
struct Poset {
    int n = 0;
    std::vector<uint64_t> above;  // above[a] = set of b with a < b

    Poset() = default;
    explicit Poset(int n_);

    // Transitive closure of the given strict relations; throws on a cycle.
    static Poset from_relations(int n, const std::vector<std::pair<int, int>>& less);

    bool less(int a, int b) const { return above[static_cast<size_t>(a)] >> b & 1; }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
    std::vector<std::pair<int, int>> relations() const;  // all strict pairs, sorted

    bool operator==(const Poset&) const = default;
};

// Edges exactly the incomparable pairs.
Graph incomparability_graph(const Poset& p);

// No induced subposet isomorphic to a 3-chain plus an incomparable element.
bool is_31_free(const Poset& p);

Poset chain(int n);

// Disjoint union; elements of b are shifted after a's.
Poset poset_sum(const Poset& a, const Poset& b);

// "chain:n", or a disjoint sum of chains like "3+1" or "2+1+1".
Poset named_poset(const std::string& spec);

bool poset_isomorphic(const Poset& a, const Poset& b);

// All posets on n elements up to isomorphism (n <= 5), by filtering orientations;
// test and acceptance helper.
std::vector<Poset> all_posets_up_to_iso(int n);

}  // namespace kromatic
