#pragma once

// Worked examples with known answers, used by `selftest` and the test suites.

#include <string>
#include <vector>

#include "schurpath/overlay.hpp"
#include "schurpath/partition.hpp"

namespace schurpath::golden {

/// Parts padded with zeros to `rows` entries.
std::vector<int> padded(const Partition& p, int rows);

/// Twelve-row white family (shift 2) over a twelve-row black family (shift 0)
/// at N = 13, whose bicoloured paths join (15,N)-(10,1) and (5,1)-(-8,1).
Overlay twelve_row_overlay();

/// Two tableaux of shape (7,4,4,3,1,1,1)/(3,2,2,1) at N = 8, white shift 1,
/// black shift 0.
Overlay seven_row_overlay();

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs every worked example; each check reports pass/fail with a short detail.
std::vector<Check> run_suite();

}  // namespace schurpath::golden
