#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qpseudo/contour.hpp"
#include "qpseudo/grid.hpp"
#include "qpseudo/qmatrix.hpp"
#include "qpseudo/spectral.hpp"
#include "qpseudo/verify.hpp"

namespace qps {

/// Parses {"n": n, "entries": [[[w,x,y,z], ...], ...]}. Throws ParseError
/// naming the offending row/column.
QMatrix parse_matrix_json(std::string_view text);
/// Inverse of parse_matrix_json; doubles are written with round-trip precision.
std::string matrix_to_json(const QMatrix& m);

/// Resolves a named matrix, a path to a JSON document, or inline JSON text.
QMatrix resolve_matrix(const std::string& source);

/// "x,y,smin" header then one row per node, 17 significant digits.
std::string field_to_csv(const ScalarField& f);
/// {"spec": {...}, "values": [...]}.
std::string field_to_json(const ScalarField& f);

/// {"level", "spec", "polylines": [{"closed", "points": [[x,y], ...]}]}.
std::string contour_to_json(const ContourSet& c);
/// Standalone SVG: unit-square viewBox mapped onto the grid rectangle, the
/// polylines and the real axis.
std::string contour_to_svg(const ContourSet& c);

/// "[(re, im), ...]" with 15 significant digits.
std::string spectrum_to_text(const SSpectrum& s);
std::string spectrum_to_json(const SSpectrum& s);

std::string reports_to_json(const std::vector<CheckReport>& reports);

/// printf-style "%.*g" formatting with '.' as decimal separator.
std::string format_double(double v, int digits = 17);

}  // namespace qps
