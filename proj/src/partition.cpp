#include "schurpath/partition.hpp"

#include <algorithm>
#include <numeric>

#include "schurpath/error.hpp"

namespace schurpath {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
        case ErrorCode::NegativePart: return "NegativePart";
        case ErrorCode::RowsTooSmall: return "RowsTooSmall";
        case ErrorCode::NotStrictlyDecreasing: return "NotStrictlyDecreasing";
        case ErrorCode::NegativeResultingPart: return "NegativeResultingPart";
        case ErrorCode::EmptyPartition: return "EmptyPartition";
        case ErrorCode::RowOutOfRange: return "RowOutOfRange";
        case ErrorCode::BoxNumberOutOfRange: return "BoxNumberOutOfRange";
        case ErrorCode::StripDoesNotFit: return "StripDoesNotFit";
        case ErrorCode::ConstraintViolated: return "ConstraintViolated";
        case ErrorCode::NotContained: return "NotContained";
        case ErrorCode::RowViolation: return "RowViolation";
        case ErrorCode::ColumnViolation: return "ColumnViolation";
        case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::MalformedFamily: return "MalformedFamily";
        case ErrorCode::LevelMismatch: return "LevelMismatch";
        case ErrorCode::OddColouredCount: return "OddColouredCount";
        case ErrorCode::NotColouredPoint: return "NotColouredPoint";
        case ErrorCode::PathNotInOverlay: return "PathNotInOverlay";
        case ErrorCode::NotAdmissibleConfiguration: return "NotAdmissibleConfiguration";
        case ErrorCode::VariableCountMismatch: return "VariableCountMismatch";
        case ErrorCode::NotAlternating: return "NotAlternating";
        case ErrorCode::EmptyS: return "EmptyS";
        case ErrorCode::SNotInward: return "SNotInward";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Partition::Partition(std::initializer_list<int> parts) {
    *this = from(std::span<const int>(parts.begin(), parts.size()));
}

Partition Partition::from(std::span<const int> seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 0) {
            throw Error(ErrorCode::NegativePart, "part " + std::to_string(i + 1) + " is " +
                                                     std::to_string(seq[i]));
        }
        if (i + 1 < seq.size() && seq[i] < seq[i + 1]) {
            throw Error(ErrorCode::NotWeaklyDecreasing,
                        "part " + std::to_string(i + 1) + " < part " + std::to_string(i + 2));
        }
    }
    Partition p;
    p.parts_.assign(seq.begin(), seq.end());
    while (!p.parts_.empty() && p.parts_.back() == 0) p.parts_.pop_back();
    return p;
}

Partition validate_partition(std::span<const int> seq) { return Partition::from(seq); }

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::column_length(int j) const noexcept {
    if (j < 1) return 0;
    return static_cast<int>(
        std::count_if(parts_.begin(), parts_.end(), [j](int part) { return part >= j; }));
}

bool Partition::contains(const Partition& inner) const noexcept {
    if (inner.length() > length()) return false;
    for (int i = 1; i <= inner.length(); ++i) {
        if (inner[i] > (*this)[i]) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!outer.contains(inner)) {
        throw Error(ErrorCode::NotContained,
                    "(" + inner.to_string() + ") not inside (" + outer.to_string() + ")");
    }
}

int SkewShape::max_column_height() const noexcept {
    int best = 0;
    for (int j = 1; j <= outer[1]; ++j) {
        best = std::max(best, outer.column_length(j) - inner.column_length(j));
    }
    return best;
}

std::string SkewShape::to_string() const { return outer.to_string() + "/" + inner.to_string(); }

PointSet to_points(const Partition& p, int rows, std::int64_t shift) {
    if (rows < p.length()) {
        throw Error(ErrorCode::RowsTooSmall, std::to_string(rows) + " rows for a partition of length " +
                                                 std::to_string(p.length()));
    }
    PointSet ps;
    ps.shift = shift;
    ps.values.reserve(static_cast<std::size_t>(rows));
    for (int i = 1; i <= rows; ++i) ps.values.push_back(std::int64_t{p[i]} - i + shift);
    return ps;
}

Partition from_points(const PointSet& ps) {
    std::vector<int> parts;
    parts.reserve(ps.values.size());
    for (std::size_t i = 0; i < ps.values.size(); ++i) {
        if (i > 0 && ps.values[i] >= ps.values[i - 1]) {
            throw Error(ErrorCode::NotStrictlyDecreasing, "point " + std::to_string(i + 1));
        }
        const std::int64_t part = ps.values[i] + static_cast<std::int64_t>(i + 1) - ps.shift;
        if (part < 0) {
            throw Error(ErrorCode::NegativeResultingPart,
                        "row " + std::to_string(i + 1) + " would have length " + std::to_string(part));
        }
        parts.push_back(static_cast<int>(part));
    }
    return Partition::from(parts);
}

PlacedShape::PlacedShape(SkewShape s, std::int64_t shift_, int rows_)
    : shape(std::move(s)), rows(rows_ < 0 ? shape.outer.length() : rows_), shift(shift_) {
    if (rows < shape.outer.length()) {
        throw Error(ErrorCode::RowsTooSmall, std::to_string(rows) + " rows for " + shape.to_string());
    }
}

std::optional<PlacedShape> placed_from_points(std::vector<std::int64_t> starts,
                                              std::vector<std::int64_t> ends) {
    if (starts.size() != ends.size()) return std::nullopt;
    std::sort(starts.begin(), starts.end(), std::greater<>{});
    std::sort(ends.begin(), ends.end(), std::greater<>{});
    const int rows = static_cast<int>(starts.size());
    const std::int64_t shift = rows == 0 ? 0 : starts.back() + rows;
    for (int i = 0; i < rows; ++i) {
        if (ends[static_cast<std::size_t>(i)] < starts[static_cast<std::size_t>(i)]) return std::nullopt;
        if (i > 0 && (starts[static_cast<std::size_t>(i)] == starts[static_cast<std::size_t>(i - 1)] ||
                      ends[static_cast<std::size_t>(i)] == ends[static_cast<std::size_t>(i - 1)])) {
            throw Error(ErrorCode::NotStrictlyDecreasing, "repeated boundary point");
        }
    }
    const Partition outer = from_points(PointSet{ends, shift});
    const Partition inner = from_points(PointSet{starts, shift});
    return PlacedShape(SkewShape(outer, inner), shift, rows);
}

PointSet insert_point(PointSet ps, std::int64_t value) {
    auto it = std::lower_bound(ps.values.begin(), ps.values.end(), value, std::greater<>{});
    if (it != ps.values.end() && *it == value) {
        throw Error(ErrorCode::StripDoesNotFit, "point " + std::to_string(value) + " already present");
    }
    ps.values.insert(it, value);
    return ps;
}

PointSet remove_point(PointSet ps, std::int64_t value) {
    auto it = std::lower_bound(ps.values.begin(), ps.values.end(), value, std::greater<>{});
    if (it == ps.values.end() || *it != value) {
        throw Error(ErrorCode::StripDoesNotFit, "point " + std::to_string(value) + " not present");
    }
    ps.values.erase(it);
    return ps;
}

Partition peel_complete(const Partition& p) {
    if (p.empty()) throw Error(ErrorCode::EmptyPartition, "nothing to peel");
    std::vector<int> out;
    for (int i = 1; i < p.length(); ++i) out.push_back(p[i + 1] - 1);
    return Partition::from(out);
}

Partition peel_down(const Partition& p, int row) {
    if (row < 1 || row > p.length()) {
        throw Error(ErrorCode::RowOutOfRange,
                    "row " + std::to_string(row) + " of a partition of length " + std::to_string(p.length()));
    }
    std::vector<int> out;
    for (int j = 1; j < p.length(); ++j) out.push_back(j < row ? p[j] : p[j + 1] - 1);
    return Partition::from(out);
}

Partition peel_up(const Partition& p, int row, int box) {
    if (row < 1 || row > p.length()) {
        throw Error(ErrorCode::RowOutOfRange,
                    "row " + std::to_string(row) + " of a partition of length " + std::to_string(p.length()));
    }
    const int positions = p[row] - p[row + 1];
    if (box < 1 || box > positions) {
        throw Error(ErrorCode::BoxNumberOutOfRange, "box " + std::to_string(box) + " of " +
                                                        std::to_string(positions) + " in row " +
                                                        std::to_string(row));
    }
    std::vector<int> out;
    for (int j = 1; j <= p.length(); ++j) {
        if (j < row) {
            out.push_back(p[j + 1] - 1);
        } else if (j == row) {
            out.push_back(p[row + 1] + box - 1);
        } else {
            out.push_back(p[j]);
        }
    }
    return Partition::from(out);
}

namespace {

void check_strip_fits(const Partition& p, const StripSpec& s) {
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::StripDoesNotFit, "strip (t=" + std::to_string(s.boxes) + ", r=" +
                                                    std::to_string(s.row) + ", m=" + std::to_string(s.span) +
                                                    "): " + why);
    };
    if (s.row < 2 || s.row > p.length()) fail("row must lie in 2..length");
    if (s.span < 1) fail("span must be positive");
    if (s.row + s.span - 1 > p.length()) fail("strip runs past the last row");
    if (s.boxes < 1 || s.boxes > p[s.row - 1] - p[s.row]) fail("box count outside 1..p[r-1]-p[r]");
}

}  // namespace

Partition add_strip(const Partition& p, const StripSpec& s) {
    check_strip_fits(p, s);
    const int last = s.row + s.span - 1;
    std::vector<int> out;
    for (int j = 1; j <= p.length(); ++j) {
        if (j < s.row || j > last) {
            out.push_back(p[j]);
        } else if (j == s.row) {
            out.push_back(p[s.row] + s.boxes);
        } else {
            out.push_back(p[j - 1] + 1);
        }
    }
    return Partition::from(out);
}

Partition build_nu(const Partition& p, std::span<const StripSpec> strips) {
    auto fail = [](std::size_t index, const std::string& why) {
        throw Error(ErrorCode::ConstraintViolated, "strip " + std::to_string(index + 1) + ": " + why);
    };
    for (std::size_t i = 0; i < strips.size(); ++i) {
        const StripSpec& s = strips[i];
        if (s.row < 2 || s.row > p.length()) fail(i, "row r must satisfy 2 <= r <= length");
        if (i > 0 && s.row <= strips[i - 1].row) fail(i, "rows must be strictly increasing");
        if (p[s.row] >= p[s.row - 1]) fail(i, "row r must be strictly shorter than row r-1");
        if (s.boxes < 1 || s.boxes > p[s.row - 1] - p[s.row]) fail(i, "t must satisfy 1 <= t <= p[r-1]-p[r]");
        const int next_row = i + 1 < strips.size() ? strips[i + 1].row : p.length() + 1;
        if (s.span < 1 || s.span > next_row - s.row) fail(i, "m must satisfy 1 <= m <= r_next - r");
    }
    Partition nu = p;
    for (const StripSpec& s : strips) nu = add_strip(nu, s);
    return nu;
}

}  // namespace schurpath
