#pragma once

#include <string>
#include <vector>

#include "qrel/sweep.hpp"

namespace qrel {

/// Self-contained SVG 1.1 line chart of the coherence column: one polyline
/// per series, axis labels from the spec, legend from the series labels.
/// Polylines longer than 2000 vertices are decimated. Throws EmptyDataError
/// when rows is empty.
std::string render_svg(const std::vector<CsvRow>& rows, const SweepSpec& spec);

}  // namespace qrel
