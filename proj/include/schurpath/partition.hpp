#pragma once

// Partitions, skew shapes and the point-set (beta-set) model.
//
// A partition with `rows` rows and shift t is encoded by the strictly
// decreasing integers part[i] - (i+1) + t.  Every border-strip operation
// below is defined as inserting/removing values in that set; the closed
// forms in partition.cpp are checked against the point model in tests.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schurpath {

/// Weakly decreasing positive parts; trailing zeros are never stored.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);

    /// Validating constructor from any sequence (drops trailing zeros).
    static Partition from(std::span<const int> seq);
    static Partition from(const std::vector<int>& seq) { return from(std::span<const int>(seq)); }

    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept;  ///< |p|, sum of parts

    /// 1-based part access; returns 0 past the end.
    int operator[](int i) const noexcept {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    const std::vector<int>& parts() const noexcept { return parts_; }

    /// Length of column j (1-based), i.e. the conjugate part.
    int column_length(int j) const noexcept;

    bool contains(const Partition& inner) const noexcept;

    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

Partition validate_partition(std::span<const int> seq);

/// outer / inner with inner contained in outer.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition outer_, Partition inner_ = {});

    int size() const noexcept { return outer.size() - inner.size(); }
    int row_length(int i) const noexcept { return outer[i] - inner[i]; }
    bool empty() const noexcept { return size() == 0; }
    /// Largest number of cells in a single column.
    int max_column_height() const noexcept;

    std::string to_string() const;  ///< "7,4,4/3,2" form

    friend auto operator<=>(const SkewShape&, const SkewShape&) = default;
};

/// Strictly decreasing integers encoding a partition with a fixed row count.
struct PointSet {
    std::vector<std::int64_t> values;
    std::int64_t shift = 0;

    int rows() const noexcept { return static_cast<int>(values.size()); }

    friend bool operator==(const PointSet&, const PointSet&) = default;
};

PointSet to_points(const Partition& p, int rows, std::int64_t shift);

/// A skew shape together with the row count and shift of its path family.
/// `rows` may exceed the outer length; the extra rows are empty.
struct PlacedShape {
    SkewShape shape;
    int rows = 0;
    std::int64_t shift = 0;

    PlacedShape() = default;
    PlacedShape(SkewShape s, std::int64_t shift_ = 0, int rows_ = -1);

    PointSet starts() const { return to_points(shape.inner, rows, shift); }
    PointSet ends() const { return to_points(shape.outer, rows, shift); }

    friend bool operator==(const PlacedShape&, const PlacedShape&) = default;
};

/// Decodes starting/ending x-coordinates (any order) with the canonical
/// shift, the one that makes the last inner row zero.  Returns nullopt when
/// the counts differ or some row would have negative length.
std::optional<PlacedShape> placed_from_points(std::vector<std::int64_t> starts,
                                              std::vector<std::int64_t> ends);

Partition from_points(const PointSet& ps);

/// Point-set primitives.  Both keep the set sorted in decreasing order.
PointSet insert_point(PointSet ps, std::int64_t value);
PointSet remove_point(PointSet ps, std::int64_t value);

/// Removes the complete border strip (the largest point).
Partition peel_complete(const Partition& p);
/// Removes the partial border strip starting at the last box of row i.
Partition peel_down(const Partition& p, int row);
/// Removes a partial border strip from box t of row i up to the first row.
Partition peel_up(const Partition& p, int row, int box);

/// Partial border strip of `boxes` cells in `row` spanning `span` rows.
struct StripSpec {
    int boxes = 0;
    int row = 0;
    int span = 0;

    friend bool operator==(const StripSpec&, const StripSpec&) = default;
};

Partition add_strip(const Partition& p, const StripSpec& s);

/// Successive strip additions with the constraints of the two-Schur
/// expansion checked against the original partition.
Partition build_nu(const Partition& p, std::span<const StripSpec> strips);

}  // namespace schurpath
