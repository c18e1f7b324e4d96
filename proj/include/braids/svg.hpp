#pragma once

#include <string>

#include "braids/braid_word.hpp"

namespace braids {

// Braid diagram as SVG: strands run top to bottom as polylines, one
// crossing per row at uniform height, the under-strand drawn with a gap.
// A positive letter i pulls strand i+1 over strand i.
std::string render_svg(const BraidWord& w);

}  // namespace braids
