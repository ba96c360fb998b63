#include "schurpath/overlay.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "schurpath/error.hpp"

namespace schurpath {

namespace {

constexpr int slot(Colour c) noexcept { return static_cast<int>(c); }

std::vector<std::int64_t> sorted_desc(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end(), std::greater<>{});
    return v;
}

/// Splits two point sets into (both, only a, only b).
void classify(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
              std::vector<std::int64_t>& both, std::vector<std::int64_t>& only_a,
              std::vector<std::int64_t>& only_b) {
    const std::set<std::int64_t> sa(a.begin(), a.end());
    const std::set<std::int64_t> sb(b.begin(), b.end());
    for (std::int64_t x : sa) (sb.count(x) ? both : only_a).push_back(x);
    for (std::int64_t x : sb) {
        if (!sa.count(x)) only_b.push_back(x);
    }
    both = sorted_desc(std::move(both));
}

}  // namespace

int CircularConfiguration::inward_count() const noexcept {
    return static_cast<int>(std::count_if(coloured.begin(), coloured.end(), [](const ColouredPoint& p) {
        return p.orientation == Orientation::Inward;
    }));
}

bool CircularConfiguration::alternating() const noexcept {
    const std::size_t n = coloured.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (coloured[i].orientation == coloured[(i + 1) % n].orientation) return false;
    }
    return true;
}

const ColouredPoint* CircularConfiguration::find(BoundaryPoint p) const noexcept {
    for (const ColouredPoint& c : coloured) {
        if (c.x == p.x && c.side == p.side) return &c;
    }
    return nullptr;
}

CircularConfiguration circular_configuration(std::vector<std::int64_t> doubled_top,
                                             std::vector<std::int64_t> doubled_bottom,
                                             std::vector<ColouredPoint> coloured) {
    if (coloured.size() % 2 != 0) {
        throw Error(ErrorCode::OddColouredCount, std::to_string(coloured.size()) + " coloured points");
    }
    std::sort(coloured.begin(), coloured.end(), [](const ColouredPoint& a, const ColouredPoint& b) {
        if (a.side != b.side) return a.side == Side::Top;
        return a.side == Side::Top ? a.x > b.x : a.x < b.x;
    });
    for (std::size_t i = 0; i < coloured.size(); ++i) {
        coloured[i].index = static_cast<int>(i) + 1;
        coloured[i].orientation = orientation_of(coloured[i].colour, coloured[i].side);
    }
    return CircularConfiguration{sorted_desc(std::move(doubled_top)), sorted_desc(std::move(doubled_bottom)),
                                 std::move(coloured)};
}

CircularConfiguration circular_configuration(const PlacedShape& white, const PlacedShape& black) {
    std::vector<std::int64_t> doubled_top, doubled_bottom, white_only, black_only;
    std::vector<ColouredPoint> coloured;
    auto emit = [&](const std::vector<std::int64_t>& xs, Side side, Colour colour) {
        for (std::int64_t x : xs) coloured.push_back(ColouredPoint{x, side, colour, orientation_of(colour, side), 0});
    };
    classify(white.ends().values, black.ends().values, doubled_top, white_only, black_only);
    emit(white_only, Side::Top, Colour::White);
    emit(black_only, Side::Top, Colour::Black);
    white_only.clear();
    black_only.clear();
    classify(white.starts().values, black.starts().values, doubled_bottom, white_only, black_only);
    emit(white_only, Side::Bottom, Colour::White);
    emit(black_only, Side::Bottom, Colour::Black);
    return circular_configuration(std::move(doubled_top), std::move(doubled_bottom), std::move(coloured));
}

std::optional<ShapePair> configuration_to_shapes(const CircularConfiguration& c) {
    std::vector<std::int64_t> starts[2] = {c.doubled_bottom, c.doubled_bottom};
    std::vector<std::int64_t> ends[2] = {c.doubled_top, c.doubled_top};
    for (const ColouredPoint& p : c.coloured) {
        const Colour colour = colour_of(p.orientation, p.side);
        (p.side == Side::Top ? ends : starts)[slot(colour)].push_back(p.x);
    }
    auto white = placed_from_points(starts[0], ends[0]);
    auto black = placed_from_points(starts[1], ends[1]);
    if (!white || !black) return std::nullopt;
    return ShapePair{std::move(*white), std::move(*black)};
}

int Matching::partner(int index) const noexcept {
    for (const auto& [a, b] : edges) {
        if (a == index) return b;
        if (b == index) return a;
    }
    return 0;
}

bool is_noncrossing(const Matching& m) noexcept {
    for (const auto& [a, b] : m.edges) {
        for (const auto& [c, d] : m.edges) {
            if (a < c && c < b && b < d) return false;
        }
    }
    return true;
}

std::vector<Matching> enumerate_admissible_matchings(const CircularConfiguration& c) {
    if (!c.admissible()) {
        throw Error(ErrorCode::NotAdmissibleConfiguration,
                    std::to_string(c.inward_count()) + " inward of " + std::to_string(c.coloured.size()) + " points");
    }
    const int n = static_cast<int>(c.coloured.size());
    auto orientation = [&](int index) { return c.coloured[static_cast<std::size_t>(index - 1)].orientation; };
    // all admissible matchings of the interval [lo, hi]
    std::function<std::vector<std::vector<std::pair<int, int>>>(int, int)> match = [&](int lo, int hi) {
        std::vector<std::vector<std::pair<int, int>>> out;
        if (lo > hi) {
            out.emplace_back();
            return out;
        }
        for (int j = lo + 1; j <= hi; j += 2) {
            if (orientation(lo) == orientation(j)) continue;
            const auto inside = match(lo + 1, j - 1);
            if (inside.empty()) continue;
            const auto outside = match(j + 1, hi);
            for (const auto& in : inside) {
                for (const auto& rest : outside) {
                    std::vector<std::pair<int, int>> edges{{lo, j}};
                    edges.insert(edges.end(), in.begin(), in.end());
                    edges.insert(edges.end(), rest.begin(), rest.end());
                    out.push_back(std::move(edges));
                }
            }
        }
        return out;
    };
    std::vector<Matching> result;
    for (auto& edges : match(1, n)) {
        std::sort(edges.begin(), edges.end());
        result.push_back(Matching{std::move(edges)});
    }
    std::sort(result.begin(), result.end());
    return result;
}

CircularConfiguration reorient(const CircularConfiguration& c, std::span<const std::pair<int, int>> edges) {
    CircularConfiguration out = c;
    for (const auto& [a, b] : edges) {
        for (int index : {a, b}) {
            ColouredPoint& p = out.coloured.at(static_cast<std::size_t>(index - 1));
            p.orientation = reversed(p.orientation);
            p.colour = colour_of(p.orientation, p.side);
        }
    }
    return out;
}

Overlay::Overlay(PathFamily white, PathFamily black) : white_(std::move(white)), black_(std::move(black)) {
    if (white_.top != black_.top) {
        throw Error(ErrorCode::LevelMismatch,
                    "white ends on level " + std::to_string(white_.top) + ", black on " + std::to_string(black_.top));
    }
    if (white_.top < 2) throw Error(ErrorCode::LevelMismatch, "overlays need at least two levels");
    for (Colour c : {Colour::White, Colour::Black}) {
        const PathFamily& f = family(c);
        if (!is_nonintersecting(f.paths)) {
            throw Error(ErrorCode::MalformedFamily, std::string(c == Colour::White ? "white" : "black") +
                                                        " family intersects itself");
        }
        for (const LatticePath& path : f.paths) {
            LatticePoint p = path.start;
            incidence_[p].on[slot(c)] = true;
            for (Step s : path.steps) {
                const Arc arc{p, s};
                arcs_[slot(c)].insert(arc);
                incidence_[p].out[slot(c)] = arc;
                p = arc.head();
                incidence_[p].in[slot(c)] = arc;
                incidence_[p].on[slot(c)] = true;
            }
        }
    }
    PlacedShape w(white_.shape, white_.shift, white_.rows());
    PlacedShape b(black_.shape, black_.shift, black_.rows());
    config_ = circular_configuration(w, b);
}

Overlay make_overlay(PathFamily white, PathFamily black) { return Overlay(std::move(white), std::move(black)); }

CircularConfiguration circular_configuration(const Overlay& ov) { return ov.configuration(); }

bool Overlay::is_coloured(const Arc& a) const noexcept {
    return arcs_[0].count(a) != arcs_[1].count(a);
}

std::vector<std::pair<Arc, Colour>> Overlay::coloured_arcs() const {
    std::vector<std::pair<Arc, Colour>> out;
    for (Colour c : {Colour::White, Colour::Black}) {
        for (const Arc& a : arcs(c)) {
            if (!arcs(other(c)).count(a)) out.emplace_back(a, c);
        }
    }
    return out;
}

std::vector<BoundaryPoint> Overlay::doubled_points() const {
    std::vector<BoundaryPoint> out;
    for (std::int64_t x : config_.doubled_top) out.push_back({x, Side::Top});
    for (std::int64_t x : config_.doubled_bottom) out.push_back({x, Side::Bottom});
    return out;
}

const Overlay::Incidence* Overlay::incidence(const LatticePoint& p) const {
    auto it = incidence_.find(p);
    return it == incidence_.end() ? nullptr : &it->second;
}

std::optional<std::pair<Arc, Colour>> Overlay::partner(const Arc& arc, Colour c, const LatticePoint& at) const {
    const Incidence* inc = incidence(at);
    if (inc == nullptr) return std::nullopt;
    const bool arriving = arc.head() == at;  // `arc` enters `at`
    const Colour o = other(c);
    if (inc->on[slot(o)]) {
        const std::optional<Arc>& candidate = arriving ? inc->in[slot(o)] : inc->out[slot(o)];
        if (candidate && *candidate != arc) return std::make_pair(*candidate, o);
        return std::nullopt;
    }
    const std::optional<Arc>& candidate = arriving ? inc->out[slot(c)] : inc->in[slot(c)];
    if (candidate) return std::make_pair(*candidate, c);
    return std::nullopt;
}

std::vector<std::pair<Arc, Colour>> Overlay::terminals(const LatticePoint& at) const {
    std::vector<std::pair<Arc, Colour>> out;
    const Incidence* inc = incidence(at);
    if (inc == nullptr) return out;
    for (Colour c : {Colour::White, Colour::Black}) {
        for (const std::optional<Arc>& arc : {inc->in[slot(c)], inc->out[slot(c)]}) {
            if (arc && is_coloured(*arc) && !partner(*arc, c, at)) out.emplace_back(*arc, c);
        }
    }
    return out;
}

BicolouredPath trace_bicoloured(const Overlay& ov, BoundaryPoint q) {
    const CircularConfiguration& config = ov.configuration();
    const ColouredPoint* start = config.find(q);
    if (start == nullptr) {
        throw Error(ErrorCode::NotColouredPoint, "(" + std::to_string(q.x) + "," +
                                                     (q.side == Side::Top ? std::to_string(ov.top()) : "1") + ")");
    }
    LatticePoint at = ov.lattice_point(q);
    const auto initial = ov.terminals(at);
    if (initial.size() != 1) {
        throw std::logic_error("coloured point with " + std::to_string(initial.size()) + " terminal arcs");
    }
    BicolouredPath path;
    path.from = *start;
    std::pair<Arc, Colour> current = initial.front();
    const std::size_t limit = ov.arcs(Colour::White).size() + ov.arcs(Colour::Black).size() + 1;
    for (;;) {
        path.arcs.push_back(current);
        if (path.arcs.size() > limit) throw std::logic_error("bicoloured path does not terminate");
        const Arc& arc = current.first;
        at = arc.head() == at ? arc.tail : arc.head();
        auto next = ov.partner(arc, current.second, at);
        if (!next) break;
        current = *next;
    }
    const int level = at.level;
    if (level != 1 && level != ov.top()) throw std::logic_error("bicoloured path stopped inside the strip");
    const ColouredPoint* end = config.find({at.x, level == 1 ? Side::Bottom : Side::Top});
    if (end == nullptr) throw std::logic_error("bicoloured path stopped at an uncoloured point");
    path.to = *end;
    return path;
}

BicolouredPaths all_bicoloured(const Overlay& ov) {
    BicolouredPaths out;
    std::set<int> seen;
    for (const ColouredPoint& p : ov.configuration().coloured) {
        if (seen.count(p.index)) continue;
        BicolouredPath path = trace_bicoloured(ov, p.where());
        seen.insert(path.from.index);
        seen.insert(path.to.index);
        out.matching.edges.emplace_back(std::min(path.from.index, path.to.index),
                                        std::max(path.from.index, path.to.index));
        out.paths.push_back(std::move(path));
    }
    std::sort(out.matching.edges.begin(), out.matching.edges.end());
    return out;
}

namespace {

PathFamily build_family(const std::vector<std::int64_t>& starts, const std::vector<std::int64_t>& ends,
                        const std::set<Arc>& arcs, int top) {
    auto placed = placed_from_points(starts, ends);
    if (!placed) throw Error(ErrorCode::MalformedFamily, "recoloured boundary does not encode a skew shape");
    PathFamily family;
    family.shape = placed->shape;
    family.shift = placed->shift;
    family.top = top;
    const std::vector<std::int64_t> s = sorted_desc(starts);
    const std::vector<std::int64_t> e = sorted_desc(ends);
    for (std::size_t i = 0; i < s.size(); ++i) {
        LatticePath path;
        path.start = {s[i], 1};
        LatticePoint p = path.start;
        for (;;) {
            if (arcs.count(Arc{p, Step::Right})) {
                path.steps.push_back(Step::Right);
                ++p.x;
            } else if (arcs.count(Arc{p, Step::Up})) {
                path.steps.push_back(Step::Up);
                ++p.level;
            } else {
                break;
            }
        }
        if (p.level != top || p.x != e[i]) {
            throw Error(ErrorCode::MalformedFamily, "path " + std::to_string(i + 1) + " ends at (" +
                                                        std::to_string(p.x) + "," + std::to_string(p.level) + ")");
        }
        family.paths.push_back(std::move(path));
    }
    return family;
}

}  // namespace

Overlay recolour(const Overlay& ov, std::span<const BicolouredPath> chosen) {
    std::set<std::pair<int, int>> done;
    std::set<Arc> arcs[2] = {ov.arcs(Colour::White), ov.arcs(Colour::Black)};
    std::vector<std::int64_t> starts[2];
    std::vector<std::int64_t> ends[2];
    for (Colour c : {Colour::White, Colour::Black}) {
        for (const LatticePath& path : ov.family(c).paths) {
            starts[slot(c)].push_back(path.start.x);
            ends[slot(c)].push_back(path.end().x);
        }
    }
    auto move_point = [&](const ColouredPoint& p) {
        auto& from = (p.side == Side::Top ? ends : starts)[slot(p.colour)];
        auto& to = (p.side == Side::Top ? ends : starts)[slot(other(p.colour))];
        from.erase(std::find(from.begin(), from.end(), p.x));
        to.push_back(p.x);
    };
    for (const BicolouredPath& path : chosen) {
        const BicolouredPath actual = trace_bicoloured(ov, path.from.where());
        const std::set<std::pair<Arc, Colour>> a(actual.arcs.begin(), actual.arcs.end());
        const std::set<std::pair<Arc, Colour>> b(path.arcs.begin(), path.arcs.end());
        if (!(actual.to == path.to) || a != b) {
            throw Error(ErrorCode::PathNotInOverlay, "no bicoloured path from (" + std::to_string(path.from.x) +
                                                         ") with the given arcs");
        }
        const auto key = std::minmax(actual.from.index, actual.to.index);
        if (!done.insert(key).second) continue;
        for (const auto& [arc, colour] : actual.arcs) {
            arcs[slot(colour)].erase(arc);
            arcs[slot(other(colour))].insert(arc);
        }
        move_point(actual.from);
        move_point(actual.to);
    }
    return Overlay(build_family(starts[0], ends[0], arcs[0], ov.top()),
                   build_family(starts[1], ends[1], arcs[1], ov.top()));
}

Overlay recolour_at(const Overlay& ov, std::span<const BoundaryPoint> points) {
    std::vector<BicolouredPath> chosen;
    for (const BoundaryPoint& p : points) chosen.push_back(trace_bicoloured(ov, p));
    return recolour(ov, chosen);
}

}  // namespace schurpath
