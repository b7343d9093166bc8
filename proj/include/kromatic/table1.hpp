#pragma once

#include <string>

#include "kromatic/serialize.hpp"

namespace kromatic {

// Recompute every golden row with both the cover and the recursive engine and
// diff: the finite K-monomial expansion exactly, the p-expansion through
// degree n+1.  The report lists every mismatching term.
struct Table1Result {
    bool pass = false;
    json report;
};

Table1Result check_table1(const json& golden);

// data/golden/table1.json next to the installed data directory
std::string default_golden_path();

}  // namespace kromatic
