#pragma once

#include <string>
#include <vector>

#include "storyline/model.hpp"

namespace storyline {

struct RenderConfig {
    double delta_group = 8;   // vertical gap inside an active meeting
    double delta_sep = 24;    // vertical gap between separated curves
    double column_width = 40;
    double stroke_width = 2;
    double margin = 16;
    bool force = false;       // render even when verify_solution rejects d
    std::vector<std::string> colors;  // per character; defaults cycle a palette
};

// One x-monotone polyline per character (id = character name). At every
// column the gap between vertically consecutive characters is delta_group
// when they share an active event and delta_sep otherwise, via a prefix sum
// of gaps. Deterministic text output.
std::string render_svg(const Storyline& s, const WiringDiagram& d, const RenderConfig& cfg = {});

}  // namespace storyline
