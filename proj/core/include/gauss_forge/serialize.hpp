#pragma once

#include <string>
#include <string_view>

#include "gauss_forge/gauss.hpp"
#include "gauss_forge/geometry.hpp"

namespace gauss_forge {

/// Shortest decimal that reads back to the same double.
std::string format_double(double value);

/// Diagram file: {"kind": ..., "crossings": [{"id", "passes": [{"strand",
/// "param", "angle", "height"}]}]} with params and heights as rational
/// strings. Throws Error(Parse) for malformed JSON and the build_diagram
/// errors for invalid content.
GaussDiagram parse_diagram_json(std::string_view text);
/// Canonical text (crossings by id, passes in order); parse -> format is the
/// identity on canonical text.
std::string format_diagram_json(const GaussDiagram& diagram);

/// Polyline file: {"closure": "long"|"closed", "components": [[[x,y,z],...],...]}.
PolyLink parse_polyline_json(std::string_view text);
std::string format_polyline_json(const PolyLink& link);

}  // namespace gauss_forge
