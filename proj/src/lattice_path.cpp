#include "schurpath/lattice_path.hpp"

#include <set>

#include "schurpath/error.hpp"

namespace schurpath {

LatticePoint LatticePath::end() const {
    LatticePoint p = start;
    for (Step s : steps) {
        if (s == Step::Right) {
            ++p.x;
        } else {
            ++p.level;
        }
    }
    return p;
}

std::vector<LatticePoint> LatticePath::points() const {
    std::vector<LatticePoint> out;
    out.reserve(steps.size() + 1);
    LatticePoint p = start;
    out.push_back(p);
    for (Step s : steps) {
        if (s == Step::Right) {
            ++p.x;
        } else {
            ++p.level;
        }
        out.push_back(p);
    }
    return out;
}

PathFamily tableau_to_paths(const Tableau& t, std::int64_t shift, int rows) {
    const SkewShape& shape = t.shape;
    if (rows < 0) rows = shape.outer.length();
    if (rows < shape.outer.length()) {
        throw Error(ErrorCode::RowsTooSmall, std::to_string(rows) + " rows for " + shape.to_string());
    }
    PathFamily family;
    family.shape = shape;
    family.shift = shift;
    family.top = t.alphabet;
    for (int i = 1; i <= rows; ++i) {
        LatticePath path;
        path.start = {std::int64_t{shape.inner[i]} - i + shift, 1};
        const std::vector<int> empty;
        const std::vector<int>& entries = i <= shape.outer.length() ? t.rows[static_cast<std::size_t>(i - 1)] : empty;
        std::size_t next = 0;
        for (int level = 1; level <= t.alphabet; ++level) {
            while (next < entries.size() && entries[next] == level) {
                path.steps.push_back(Step::Right);
                ++next;
            }
            if (level < t.alphabet) path.steps.push_back(Step::Up);
        }
        family.paths.push_back(std::move(path));
    }
    return family;
}

Tableau paths_to_tableau(const PathFamily& family) {
    const int rows = family.rows();
    std::vector<int> outer;
    std::vector<int> inner;
    std::vector<std::vector<int>> entries;
    for (int i = 1; i <= rows; ++i) {
        const LatticePath& path = family.paths[static_cast<std::size_t>(i - 1)];
        const LatticePoint end = path.end();
        if (path.start.level != 1 || end.level != family.top) {
            throw Error(ErrorCode::MalformedFamily, "path " + std::to_string(i) + " does not run from level 1 to " +
                                                        std::to_string(family.top));
        }
        const std::int64_t mu = path.start.x + i - family.shift;
        const std::int64_t lambda = end.x + i - family.shift;
        if (mu < 0) {
            throw Error(ErrorCode::MalformedFamily, "path " + std::to_string(i) + " starts left of its shift");
        }
        inner.push_back(static_cast<int>(mu));
        outer.push_back(static_cast<int>(lambda));
        std::vector<int> row;
        int level = 1;
        for (Step s : path.steps) {
            if (s == Step::Up) {
                ++level;
            } else {
                row.push_back(level);
            }
        }
        entries.push_back(std::move(row));
    }
    SkewShape shape;
    try {
        shape = SkewShape(Partition::from(outer), Partition::from(inner));
    } catch (const Error& e) {
        throw Error(ErrorCode::MalformedFamily, e.what());
    }
    if (!(shape == family.shape)) {
        throw Error(ErrorCode::MalformedFamily, "endpoints encode " + shape.to_string() + ", family claims " +
                                                    family.shape.to_string());
    }
    entries.resize(static_cast<std::size_t>(shape.outer.length()));
    try {
        return validate_tableau(shape, std::move(entries), family.top);
    } catch (const Error& e) {
        throw Error(ErrorCode::MalformedFamily, e.what());
    }
}

std::pair<PointSet, PointSet> endpoints(const SkewShape& shape, int rows, std::int64_t shift) {
    return {to_points(shape.inner, rows, shift), to_points(shape.outer, rows, shift)};
}

bool is_nonintersecting(std::span<const LatticePath> paths) {
    std::set<LatticePoint> seen;
    for (const LatticePath& path : paths) {
        for (const LatticePoint& p : path.points()) {
            if (!seen.insert(p).second) return false;
        }
    }
    return true;
}

Monomial family_weight(const PathFamily& family) {
    Monomial m(family.top);
    for (const LatticePath& path : family.paths) {
        int level = 1;
        for (Step s : path.steps) {
            if (s == Step::Up) {
                ++level;
            } else {
                ++m.exponents[static_cast<std::size_t>(level - 1)];
            }
        }
    }
    return m;
}

}  // namespace schurpath
