#include "schurpath/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace schurpath {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s == "-0" ? "0" : s;
}

std::string stroke_attrs(const RenderStyle& s) {
    std::string out = "stroke=\"" + s.stroke + "\" stroke-width=\"" + num(s.width) + "\" fill=\"none\"";
    if (s.dashed) out += " stroke-dasharray=\"5 4\"";
    return out;
}

std::string header(double width, double height) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
}

struct Frame {
    std::int64_t xmin;
    int top;
    double scale;
    double margin;

    double X(std::int64_t x) const { return margin + static_cast<double>(x - xmin) * scale; }
    double Y(int level) const { return margin + static_cast<double>(top - level) * scale; }
};

std::string polyline(const Frame& f, const std::vector<LatticePoint>& pts) {
    std::string out;
    for (const LatticePoint& p : pts) {
        if (!out.empty()) out += ' ';
        out += num(f.X(p.x)) + "," + num(f.Y(p.level));
    }
    return out;
}

std::vector<LatticePoint> trail(const Overlay& ov, const BicolouredPath& b) {
    std::vector<LatticePoint> pts{ov.lattice_point(b.from.where())};
    for (const auto& [arc, colour] : b.arcs) pts.push_back(arc.tail == pts.back() ? arc.head() : arc.tail);
    return pts;
}

}  // namespace

std::string render_overlay(const Overlay& ov, std::span<const BicolouredPath> highlight, const RenderSpec& spec) {
    std::int64_t xmin = 0;
    std::int64_t xmax = 0;
    for (Colour c : {Colour::White, Colour::Black}) {
        for (const LatticePath& p : ov.family(c).paths) {
            xmin = std::min(xmin, p.start.x);
            xmax = std::max(xmax, p.end().x);
        }
    }
    const Frame f{xmin, ov.top(), spec.scale, spec.margin};
    const double width = 2 * spec.margin + static_cast<double>(xmax - xmin) * spec.scale;
    const double height = 2 * spec.margin + (ov.top() - 1) * spec.scale;

    std::ostringstream out;
    out << header(width, height);
    out << "<g class=\"axes\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
    out << "<line x1=\"" << num(f.X(xmin)) << "\" y1=\"" << num(f.Y(1)) << "\" x2=\"" << num(f.X(xmax))
        << "\" y2=\"" << num(f.Y(1)) << "\"/>\n";
    out << "<line x1=\"" << num(f.X(0)) << "\" y1=\"" << num(f.Y(1)) << "\" x2=\"" << num(f.X(0)) << "\" y2=\""
        << num(f.Y(ov.top())) << "\"/>\n";
    out << "</g>\n";

    out << "<g class=\"bicoloured\" " << stroke_attrs(spec.highlight) << " stroke-linejoin=\"round\">\n";
    for (const BicolouredPath& b : highlight) {
        out << "<polyline points=\"" << polyline(f, trail(ov, b)) << "\"/>\n";
    }
    out << "</g>\n";

    for (Colour c : {Colour::Black, Colour::White}) {
        const bool white = c == Colour::White;
        out << "<g class=\"" << (white ? "white" : "black") << "\" "
            << stroke_attrs(white ? spec.white : spec.black) << ">\n";
        const PathFamily& fam = ov.family(c);
        for (int i = 0; i < fam.rows(); ++i) {
            out << "<polyline data-row=\"" << i + 1 << "\" points=\""
                << polyline(f, fam.paths[static_cast<std::size_t>(i)].points()) << "\"/>\n";
        }
        out << "</g>\n";
    }

    const double box = spec.scale * 0.5;
    out << "<g class=\"doubled\" stroke=\"#999999\" fill=\"none\">\n";
    for (const BoundaryPoint& p : ov.doubled_points()) {
        const LatticePoint q = ov.lattice_point(p);
        out << "<rect x=\"" << num(f.X(q.x) - box / 2) << "\" y=\"" << num(f.Y(q.level) - box / 2) << "\" width=\""
            << num(box) << "\" height=\"" << num(box) << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g class=\"coloured\" stroke=\"black\">\n";
    for (const ColouredPoint& p : ov.configuration().coloured) {
        const LatticePoint q = ov.lattice_point(p.where());
        out << "<circle cx=\"" << num(f.X(q.x)) << "\" cy=\"" << num(f.Y(q.level)) << "\" r=\""
            << num(spec.scale * 0.15) << "\" fill=\"" << (p.colour == Colour::White ? "white" : "black") << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string render_configuration(const CircularConfiguration& c, const Matching* matching, const RenderSpec& spec) {
    const double radius = 4 * spec.scale;
    const double cx = spec.margin + radius + spec.scale;
    const double cy = cx;
    std::vector<std::pair<double, double>> where(c.coloured.size());
    std::vector<double> angle(c.coloured.size());
    const auto top = std::count_if(c.coloured.begin(), c.coloured.end(),
                                   [](const ColouredPoint& p) { return p.side == Side::Top; });
    const auto bottom = static_cast<std::int64_t>(c.coloured.size()) - top;
    for (std::size_t i = 0; i < c.coloured.size(); ++i) {
        const auto k = static_cast<double>(i);
        // upper half counter-clockwise from the right, lower half continuing
        const double a = c.coloured[i].side == Side::Top
                             ? std::numbers::pi * (k + 0.5) / static_cast<double>(top)
                             : std::numbers::pi * (1 + (k - static_cast<double>(top) + 0.5) / static_cast<double>(bottom));
        angle[i] = a;
        where[i] = {cx + radius * std::cos(a), cy - radius * std::sin(a)};
    }

    std::ostringstream out;
    out << header(2 * cx, 2 * cy);
    out << "<circle class=\"rim\" cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(radius)
        << "\" stroke=\"#bbbbbb\" fill=\"none\"/>\n";
    out << "<line class=\"equator\" x1=\"" << num(cx - radius) << "\" y1=\"" << num(cy) << "\" x2=\""
        << num(cx + radius) << "\" y2=\"" << num(cy) << "\" stroke=\"#bbbbbb\"/>\n";
    out << "<g class=\"chords\" stroke=\"#777777\" stroke-dasharray=\"4 3\">\n";
    if (matching != nullptr) {
        for (const auto& [a, b] : matching->edges) {
            const auto& p = where[static_cast<std::size_t>(a - 1)];
            const auto& q = where[static_cast<std::size_t>(b - 1)];
            out << "<line x1=\"" << num(p.first) << "\" y1=\"" << num(p.second) << "\" x2=\"" << num(q.first)
                << "\" y2=\"" << num(q.second) << "\"/>\n";
        }
    }
    out << "</g>\n<g class=\"points\" stroke=\"black\">\n";
    const double tick = 0.6 * spec.scale;
    for (std::size_t i = 0; i < c.coloured.size(); ++i) {
        const ColouredPoint& p = c.coloured[i];
        const auto [x, y] = where[i];
        const double sign = p.orientation == Orientation::Inward ? -1 : 1;
        out << "<line class=\"" << (p.orientation == Orientation::Inward ? "inward" : "outward") << "\" x1=\""
            << num(x) << "\" y1=\"" << num(y) << "\" x2=\"" << num(x + sign * tick * std::cos(angle[i]))
            << "\" y2=\"" << num(y - sign * tick * std::sin(angle[i])) << "\"/>\n";
        out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(spec.scale * 0.15)
            << "\" fill=\"" << (p.colour == Colour::White ? "white" : "black") << "\"/>\n";
        out << "<text x=\"" << num(cx + (radius + tick + 8) * std::cos(angle[i])) << "\" y=\""
            << num(cy - (radius + tick + 8) * std::sin(angle[i])) << "\" font-size=\"10\" stroke=\"none\">"
            << p.index << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string render_ferrers(std::span<const FerrersLayer> layers, const RenderSpec& spec) {
    int columns = 0;
    int rows = 0;
    for (const FerrersLayer& l : layers) {
        columns = std::max(columns, l.shape.outer[1]);
        rows = std::max(rows, l.shape.outer.length());
    }
    std::ostringstream out;
    out << header(2 * spec.margin + columns * spec.scale, 2 * spec.margin + rows * spec.scale);
    for (const FerrersLayer& l : layers) {
        out << "<g class=\"ferrers\" " << stroke_attrs(l.style);
        if (l.shape.empty()) {
            out << "/>\n";
            continue;
        }
        out << ">\n";
        for (int i = 1; i <= l.shape.outer.length(); ++i) {
            for (int j = l.shape.inner[i] + 1; j <= l.shape.outer[i]; ++j) {
                out << "<rect x=\"" << num(spec.margin + (j - 1) * spec.scale) << "\" y=\""
                    << num(spec.margin + (i - 1) * spec.scale) << "\" width=\"" << num(spec.scale) << "\" height=\""
                    << num(spec.scale) << "\"/>\n";
            }
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace schurpath
