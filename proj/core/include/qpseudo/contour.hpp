#pragma once

#include <vector>

#include "qpseudo/grid.hpp"

namespace qps {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Polyline {
  std::vector<Point> points;
  bool closed = false;  ///< last point repeats the first
};

struct ContourSet {
  double level = 0.0;
  GridSpec spec;  ///< rectangle the polylines live in
  std::vector<Polyline> polylines;
};

/// Marching squares on the level set field == level. Crossings are linearly
/// interpolated along cell edges; saddle cells are split according to the
/// cell-centre sample (mean of the four corners). Segments are stitched into
/// maximal polylines: closed loops, or open chains ending on the grid border.
/// Throws DomainError for level <= 0.
ContourSet contour_extract(const ScalarField& field, double level);

}  // namespace qps
