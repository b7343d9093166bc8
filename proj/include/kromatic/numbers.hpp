#pragma once

#include <gmpxx.h>

#include <string>

namespace kromatic {

// Exact arithmetic everywhere: Int for counts, Rat for basis-change coefficients.
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(int n);
Int binomial(int n, int k);

// Number of multisets of size k from n kinds: C(n+k-1, k).  multichoose(0, 0) = 1,
// multichoose(0, k>0) = 0.
Int multichoose(int n, int k);

Int stirling2(int n, int k);

// Surjections from an a-set onto a b-set: b! * S(a, b).
Int surjections(int a, int b);

// "7", "-7", "1/3"; integers carry no denominator.
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

}  // namespace kromatic
