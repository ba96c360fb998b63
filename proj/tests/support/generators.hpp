#pragma once

// Random inputs for property tests.

#include <optional>
#include <random>

#include "oracles.hpp"
#include "schurpath/lattice_path.hpp"
#include "schurpath/overlay.hpp"
#include "schurpath/tableau.hpp"

namespace gen {

inline int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

/// Random family on a random shape; `rows` may exceed the shape length.
inline schurpath::PathFamily random_family(std::mt19937_64& g, int max_size, int n) {
    for (;;) {
        const schurpath::SkewShape s = oracle::random_shape(g, max_size);
        auto t = schurpath::random_ssyt(s, n, g);
        if (!t) continue;
        const int rows = s.outer.length() + uniform(g, 0, 2);
        return schurpath::tableau_to_paths(*t, uniform(g, -3, 3), rows);
    }
}

inline schurpath::Overlay random_overlay(std::mt19937_64& g, int max_size = 8) {
    const int n = uniform(g, 2, 5);
    return schurpath::Overlay(random_family(g, max_size, n), random_family(g, max_size, n));
}

}  // namespace gen
