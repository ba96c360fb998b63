#pragma once

// Tableaux as tuples of nonintersecting lattice paths.
//
// Path i (counted from the right, 1-based) of a family with shift t runs
// from (inner_i - i + t, 1) to (outer_i - i + t, N); the cell in column c
// of row i with entry h becomes the horizontal step from
// (c - 1 - i + t, h) to (c - i + t, h).

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "schurpath/partition.hpp"
#include "schurpath/polynomial.hpp"
#include "schurpath/tableau.hpp"

namespace schurpath {

struct LatticePoint {
    std::int64_t x = 0;
    int level = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

enum class Step : unsigned char { Right, Up };

struct LatticePath {
    LatticePoint start;
    std::vector<Step> steps;

    LatticePoint end() const;
    std::vector<LatticePoint> points() const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

struct PathFamily {
    std::vector<LatticePath> paths;  ///< paths[0] is the rightmost path
    SkewShape shape;
    std::int64_t shift = 0;
    int top = 1;  ///< ending level N

    int rows() const noexcept { return static_cast<int>(paths.size()); }

    friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

/// `rows` defaults to the length of the outer partition; extra (empty) rows
/// become purely vertical paths.
PathFamily tableau_to_paths(const Tableau& t, std::int64_t shift, int rows = -1);

Tableau paths_to_tableau(const PathFamily& family);

/// Starting points (level 1) and ending points (level N) of a family.
std::pair<PointSet, PointSet> endpoints(const SkewShape& shape, int rows, std::int64_t shift);

bool is_nonintersecting(std::span<const LatticePath> paths);

/// x_k raised to the number of horizontal steps at height k.
Monomial family_weight(const PathFamily& family);

}  // namespace schurpath
