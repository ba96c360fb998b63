#include "schurpath/tableau.hpp"

#include <algorithm>

#include "schurpath/error.hpp"

namespace schurpath {

namespace {

std::string cell_name(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Tableau validate_tableau(const SkewShape& shape, std::vector<std::vector<int>> rows, int alphabet) {
    const auto r = static_cast<std::size_t>(shape.outer.length());
    if (rows.size() != r) {
        throw Error(ErrorCode::ShapeMismatch,
                    std::to_string(rows.size()) + " rows given for " + std::to_string(r) + " rows");
    }
    for (std::size_t i = 0; i < r; ++i) {
        const int row = static_cast<int>(i) + 1;
        if (rows[i].size() != static_cast<std::size_t>(shape.row_length(row))) {
            throw Error(ErrorCode::ShapeMismatch, "row " + std::to_string(i) + " has " +
                                                      std::to_string(rows[i].size()) + " entries, expected " +
                                                      std::to_string(shape.row_length(row)));
        }
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const int v = rows[i][j];
            if (v < 1 || v > alphabet) throw Error(ErrorCode::EntryOutOfRange, cell_name(i, j));
            if (j > 0 && rows[i][j - 1] > v) throw Error(ErrorCode::RowViolation, cell_name(i, j));
            if (i > 0) {
                const int column = shape.inner[row] + static_cast<int>(j) + 1;
                if (column > shape.inner[row - 1] && column <= shape.outer[row - 1]) {
                    const auto above = static_cast<std::size_t>(column - shape.inner[row - 1] - 1);
                    if (rows[i - 1][above] >= v) throw Error(ErrorCode::ColumnViolation, cell_name(i, j));
                }
            }
        }
    }
    return Tableau{shape, std::move(rows), alphabet};
}

Monomial weight(const Tableau& t) {
    Monomial m(t.alphabet);
    for (const auto& row : t.rows) {
        for (int v : row) ++m.exponents[static_cast<std::size_t>(v - 1)];
    }
    return m;
}

SsytStream::SsytStream(SkewShape shape, int alphabet) : shape_(std::move(shape)), alphabet_(alphabet) {
    const Partition& outer = shape_.outer;
    const Partition& inner = shape_.inner;
    // index of cell (row, column) in row-major order
    std::vector<int> row_start(static_cast<std::size_t>(outer.length()) + 2, 0);
    int count = 0;
    for (int i = 1; i <= outer.length(); ++i) {
        row_start[static_cast<std::size_t>(i)] = count;
        count += shape_.row_length(i);
    }
    for (int i = 1; i <= outer.length(); ++i) {
        for (int c = inner[i] + 1; c <= outer[i]; ++c) {
            Cell cell{};
            cell.row = i;
            cell.column = c;
            cell.left = c > inner[i] + 1 ? static_cast<int>(cells_.size()) - 1 : -1;
            cell.above = (i > 1 && c > inner[i - 1] && c <= outer[i - 1])
                             ? row_start[static_cast<std::size_t>(i - 1)] + (c - inner[i - 1] - 1)
                             : -1;
            const int below = outer.column_length(c) - i;
            cell.upper = alphabet_ - below;
            cells_.push_back(cell);
        }
    }
    fill_.assign(cells_.size(), 0);
    done_ = std::any_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.upper < 1; });
}

int SsytStream::lower_bound(std::size_t k) const {
    int lo = 1;
    const Cell& c = cells_[k];
    if (c.left >= 0) lo = std::max(lo, fill_[static_cast<std::size_t>(c.left)]);
    if (c.above >= 0) lo = std::max(lo, fill_[static_cast<std::size_t>(c.above)] + 1);
    return lo;
}

bool SsytStream::advance() {
    std::size_t k = cells_.size();
    if (!started_) {
        started_ = true;
        k = 0;
    } else {
        while (k > 0 && fill_[k - 1] >= cells_[k - 1].upper) --k;
        if (k == 0) return false;
        ++fill_[k - 1];
    }
    // every partial filling within the upper bounds extends minimally
    for (; k < cells_.size(); ++k) fill_[k] = lower_bound(k);
    return true;
}

const std::vector<int>* SsytStream::next_word() {
    if (done_ || !advance()) {
        done_ = true;
        return nullptr;
    }
    return &fill_;
}

std::optional<Tableau> SsytStream::next() {
    if (next_word() == nullptr) return std::nullopt;
    Tableau t;
    t.shape = shape_;
    t.alphabet = alphabet_;
    t.rows.resize(static_cast<std::size_t>(shape_.outer.length()));
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        t.rows[static_cast<std::size_t>(cells_[k].row - 1)].push_back(fill_[k]);
    }
    return t;
}

std::size_t for_each_ssyt_word(const SkewShape& shape, int alphabet,
                               const std::function<void(const std::vector<int>&)>& visit) {
    SsytStream stream(shape, alphabet);
    std::size_t count = 0;
    while (const auto* word = stream.next_word()) {
        visit(*word);
        ++count;
    }
    return count;
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int alphabet) {
    std::vector<Tableau> out;
    SsytStream stream(shape, alphabet);
    while (auto t = stream.next()) out.push_back(std::move(*t));
    return out;
}

std::optional<Tableau> random_ssyt(const SkewShape& shape, int alphabet, std::mt19937_64& gen) {
    Tableau t{shape, {}, alphabet};
    const Partition& outer = shape.outer;
    const Partition& inner = shape.inner;
    t.rows.resize(static_cast<std::size_t>(outer.length()));
    for (int i = 1; i <= outer.length(); ++i) {
        auto& row = t.rows[static_cast<std::size_t>(i - 1)];
        for (int c = inner[i] + 1; c <= outer[i]; ++c) {
            int lo = row.empty() ? 1 : row.back();
            if (i > 1 && c > inner[i - 1] && c <= outer[i - 1]) lo = std::max(lo, t.entry(i - 1, c) + 1);
            const int hi = alphabet - (outer.column_length(c) - i);
            if (lo > hi) return std::nullopt;
            row.push_back(std::uniform_int_distribution<int>(lo, hi)(gen));
        }
    }
    return t;
}

}  // namespace schurpath
