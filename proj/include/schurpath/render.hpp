#pragma once

// SVG output.  Lattice coordinates: x to the right, level upwards, origin at
// lattice point (0, 1).  Ferrers diagrams use English notation (row 1 on top).

#include <span>
#include <string>
#include <vector>

#include "schurpath/overlay.hpp"
#include "schurpath/partition.hpp"

namespace schurpath {

struct RenderStyle {
    std::string stroke = "black";
    double width = 1.5;
    bool dashed = false;
};

struct RenderSpec {
    double scale = 24;  ///< pixels per lattice unit
    double margin = 16;
    RenderStyle white{"#555555", 1.5, true};
    RenderStyle black{"black", 1.5, false};
    RenderStyle highlight{"#9a9a9a", 6, false};
};

/// Overlay with white paths dashed, black paths solid, doubled boundary
/// points boxed and the given bicoloured paths drawn as thick grey polylines
/// beneath.  Each path is one <polyline> with one vertex per lattice point.
std::string render_overlay(const Overlay& ov, std::span<const BicolouredPath> highlight = {},
                           const RenderSpec& spec = {});

/// Coloured points on a circle in circular order (upper half for level N,
/// lower half for level 1), with radial ticks for the orientation and
/// chords for the matching, if any.
std::string render_configuration(const CircularConfiguration& c, const Matching* matching = nullptr,
                                 const RenderSpec& spec = {});

struct FerrersLayer {
    SkewShape shape;
    RenderStyle style;
};

/// One <g class="ferrers"> per layer holding one <rect> per cell.
std::string render_ferrers(std::span<const FerrersLayer> layers, const RenderSpec& spec = {});

}  // namespace schurpath
