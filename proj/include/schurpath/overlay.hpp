#pragma once

// Overlays of a white and a black family of nonintersecting lattice paths,
// bicoloured paths and their recolouring.
//
// Boundary points that belong to exactly one colour are "coloured".  They
// are listed circularly: level N from right to left, then level 1 from left
// to right.  Orientation convention:
//
//     white end   (level N) -> Inward     black end   (level N) -> Outward
//     white start (level 1) -> Outward    black start (level 1) -> Inward
//
// At a lattice point lying on both colours, the two incoming coloured arcs
// are paired with each other and so are the two outgoing ones; on a point
// of one colour only, its incoming arc is paired with its outgoing arc.  An
// arc without a partner is a terminal, and terminals are exactly the
// coloured points.  Bicoloured paths are the maximal trails of this pairing.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "schurpath/lattice_path.hpp"
#include "schurpath/partition.hpp"

namespace schurpath {

enum class Colour : unsigned char { White, Black };
enum class Orientation : unsigned char { Inward, Outward };
enum class Side : unsigned char { Bottom, Top };  ///< level 1 or level N

constexpr Colour other(Colour c) noexcept { return c == Colour::White ? Colour::Black : Colour::White; }
constexpr Orientation reversed(Orientation o) noexcept {
    return o == Orientation::Inward ? Orientation::Outward : Orientation::Inward;
}
constexpr Orientation orientation_of(Colour c, Side s) noexcept {
    return (c == Colour::White) == (s == Side::Top) ? Orientation::Inward : Orientation::Outward;
}
constexpr Colour colour_of(Orientation o, Side s) noexcept {
    return (o == Orientation::Inward) == (s == Side::Top) ? Colour::White : Colour::Black;
}

struct BoundaryPoint {
    std::int64_t x = 0;
    Side side = Side::Top;

    friend auto operator<=>(const BoundaryPoint&, const BoundaryPoint&) = default;
};

struct ColouredPoint {
    std::int64_t x = 0;
    Side side = Side::Top;
    Colour colour = Colour::White;
    Orientation orientation = Orientation::Inward;
    int index = 0;  ///< 1-based position in circular order

    BoundaryPoint where() const noexcept { return {x, side}; }

    friend bool operator==(const ColouredPoint&, const ColouredPoint&) = default;
};

/// Doubled boundary points plus the circularly ordered coloured points.
struct CircularConfiguration {
    std::vector<std::int64_t> doubled_top;     ///< decreasing
    std::vector<std::int64_t> doubled_bottom;  ///< decreasing
    std::vector<ColouredPoint> coloured;

    int inward_count() const noexcept;
    bool admissible() const noexcept { return 2 * inward_count() == static_cast<int>(coloured.size()); }
    bool alternating() const noexcept;
    const ColouredPoint* find(BoundaryPoint p) const noexcept;

    friend bool operator==(const CircularConfiguration&, const CircularConfiguration&) = default;
};

/// Builds the configuration from the boundaries of two placed shapes.
CircularConfiguration circular_configuration(const PlacedShape& white, const PlacedShape& black);

/// Lists the coloured points circularly and numbers them.
CircularConfiguration circular_configuration(std::vector<std::int64_t> doubled_top,
                                             std::vector<std::int64_t> doubled_bottom,
                                             std::vector<ColouredPoint> coloured);

/// Pair of shapes encoded by a configuration, or nullopt ("zero") when the
/// white or black rows cannot be realised.
struct ShapePair {
    PlacedShape white;
    PlacedShape black;

    friend bool operator==(const ShapePair&, const ShapePair&) = default;
};
std::optional<ShapePair> configuration_to_shapes(const CircularConfiguration& c);

/// Non-crossing perfect matching on circular indices; edges are (a, b) with a < b.
struct Matching {
    std::vector<std::pair<int, int>> edges;

    int partner(int index) const noexcept;

    friend auto operator<=>(const Matching&, const Matching&) = default;
};

bool is_noncrossing(const Matching& m) noexcept;

/// All non-crossing perfect matchings joining Inward to Outward points, in
/// lexicographic order of their edge lists.
std::vector<Matching> enumerate_admissible_matchings(const CircularConfiguration& c);

/// Reverses the orientation of both ends of the given edges.
CircularConfiguration reorient(const CircularConfiguration& c, std::span<const std::pair<int, int>> edges);

struct Arc {
    LatticePoint tail;
    Step direction = Step::Right;

    LatticePoint head() const noexcept {
        return direction == Step::Right ? LatticePoint{tail.x + 1, tail.level} : LatticePoint{tail.x, tail.level + 1};
    }

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct BicolouredPath {
    ColouredPoint from;
    ColouredPoint to;
    std::vector<std::pair<Arc, Colour>> arcs;  ///< in traversal order from `from`

    friend bool operator==(const BicolouredPath&, const BicolouredPath&) = default;
};

class Overlay {
public:
    Overlay(PathFamily white, PathFamily black);

    const PathFamily& white() const noexcept { return white_; }
    const PathFamily& black() const noexcept { return black_; }
    const PathFamily& family(Colour c) const noexcept { return c == Colour::White ? white_ : black_; }
    int top() const noexcept { return white_.top; }

    const CircularConfiguration& configuration() const noexcept { return config_; }

    const std::set<Arc>& arcs(Colour c) const noexcept { return arcs_[static_cast<int>(c)]; }
    bool is_coloured(const Arc& a) const noexcept;
    std::vector<std::pair<Arc, Colour>> coloured_arcs() const;
    std::vector<BoundaryPoint> doubled_points() const;

    /// Partner of `arc` (of colour `c`) at its endpoint `at`, or nullopt when
    /// the arc terminates there.
    std::optional<std::pair<Arc, Colour>> partner(const Arc& arc, Colour c, const LatticePoint& at) const;
    /// Coloured arcs at `at` that have no partner there.
    std::vector<std::pair<Arc, Colour>> terminals(const LatticePoint& at) const;

    LatticePoint lattice_point(BoundaryPoint p) const noexcept {
        return {p.x, p.side == Side::Top ? top() : 1};
    }

    friend bool operator==(const Overlay& a, const Overlay& b) {
        return a.white_ == b.white_ && a.black_ == b.black_;
    }

private:
    struct Incidence {
        std::optional<Arc> in[2];
        std::optional<Arc> out[2];
        bool on[2] = {false, false};
    };

    const Incidence* incidence(const LatticePoint& p) const;

    PathFamily white_;
    PathFamily black_;
    std::set<Arc> arcs_[2];
    std::map<LatticePoint, Incidence> incidence_;
    CircularConfiguration config_;
};

Overlay make_overlay(PathFamily white, PathFamily black);

CircularConfiguration circular_configuration(const Overlay& ov);

BicolouredPath trace_bicoloured(const Overlay& ov, BoundaryPoint q);

struct BicolouredPaths {
    std::vector<BicolouredPath> paths;  ///< one per pair, ordered by `from.index`
    Matching matching;
};
BicolouredPaths all_bicoloured(const Overlay& ov);

/// Swaps colours along every chosen path (arcs and both ends).
Overlay recolour(const Overlay& ov, std::span<const BicolouredPath> chosen);
/// Recolours the bicoloured paths through the given coloured points.
Overlay recolour_at(const Overlay& ov, std::span<const BoundaryPoint> points);

}  // namespace schurpath
