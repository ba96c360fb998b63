#pragma once

#include <span>
#include <vector>

#include "schurpath/partition.hpp"
#include "schurpath/polynomial.hpp"

namespace schurpath {

/// Sum of tableau weights over all N-semistandard tableaux of the shape.
Polynomial skew_schur(const SkewShape& shape, int variables);

/// h_0..h_max_degree evaluated at `values`.
std::vector<Integer> complete_homogeneous(std::span<const Integer> values, int max_degree);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Integer bareiss_determinant(std::vector<std::vector<Integer>> matrix);

/// det(h_{outer_i - inner_j - i + j}) at an integer point.  Independent of
/// the tableau enumeration and cheap for long shapes.
Integer skew_schur_eval(const SkewShape& shape, std::span<const Integer> values);

/// Number of N-semistandard tableaux, i.e. the value at (1,...,1).
Integer tableau_count(const SkewShape& shape, int variables);

}  // namespace schurpath
