#pragma once

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "schurpath/partition.hpp"
#include "schurpath/polynomial.hpp"

namespace schurpath {

/// N-semistandard skew tableau.  rows[i] holds the entries of row i+1,
/// left to right, starting at column inner[i+1] + 1.
struct Tableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;
    int alphabet = 0;  ///< entries are drawn from 1..alphabet

    int entry(int row, int column) const {
        return rows[static_cast<std::size_t>(row - 1)]
                   [static_cast<std::size_t>(column - shape.inner[row] - 1)];
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Checks dimensions, the entry range and the row/column conditions.
/// Violations report 0-based (row, column-in-row) coordinates.
Tableau validate_tableau(const SkewShape& shape, std::vector<std::vector<int>> rows, int alphabet);

/// Exponent of x_k is the multiplicity of k.
Monomial weight(const Tableau& t);

/// Lazily enumerates all N-semistandard tableaux of a skew shape in
/// row-major lexicographic order.
class SsytStream {
public:
    SsytStream(SkewShape shape, int alphabet);

    std::optional<Tableau> next();
    /// Row-major entry word of the next tableau; nullptr when exhausted.
    /// The pointer is invalidated by the following call.
    const std::vector<int>* next_word();

private:
    struct Cell {
        int row;
        int column;
        int left;   ///< index of the cell to the left, or -1
        int above;  ///< index of the cell above, or -1
        int upper;  ///< largest admissible entry given the cells below
    };

    int lower_bound(std::size_t k) const;
    bool advance();

    SkewShape shape_;
    int alphabet_;
    std::vector<Cell> cells_;
    std::vector<int> fill_;
    bool started_ = false;
    bool done_ = false;
};

/// Calls `visit` with the row-major entry word of every tableau; cheaper than
/// materialising Tableau values.  Returns the number of tableaux visited.
std::size_t for_each_ssyt_word(const SkewShape& shape, int alphabet,
                               const std::function<void(const std::vector<int>&)>& visit);

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int alphabet);

/// Random tableau: cells filled in row-major order, each uniformly within
/// its feasible range.  Not uniform over tableaux.  nullopt if none exists.
std::optional<Tableau> random_ssyt(const SkewShape& shape, int alphabet, std::mt19937_64& gen);

}  // namespace schurpath
