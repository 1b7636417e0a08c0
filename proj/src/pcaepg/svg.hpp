#pragma once

#include <string>

#include "pcaepg/epg.hpp"

namespace pcaepg {

// Grid plus one offset polyline per path.  Co-linear overlapping paths get
// deterministic sub-cell offsets by vertex index so shared runs stay visible,
// mirroring the figure style; purely presentational.
std::string render_svg(const EpgRepresentation& rep);

}  // namespace pcaepg
