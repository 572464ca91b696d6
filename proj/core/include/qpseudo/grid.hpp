#pragma once

#include <cstddef>
#include <vector>

#include "qpseudo/qmatrix.hpp"

namespace qps {

/// Rectangular node grid over the slice plane C_i. Scans live on the closed
/// upper half-plane; reflected (full-slice) grids have y_min = -y_max.
struct GridSpec {
  double x_min = -1.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
  std::size_t nx = 2;
  std::size_t ny = 2;

  /// Throws DomainError unless x_min < x_max, 0 <= y_min < y_max, nx, ny >= 2.
  void validate() const;

  double x(std::size_t ix) const { return x_min + (x_max - x_min) * static_cast<double>(ix) / static_cast<double>(nx - 1); }
  double y(std::size_t iy) const { return y_min + (y_max - y_min) * static_cast<double>(iy) / static_cast<double>(ny - 1); }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Default scan box for Lambda_eps(A): x in [-R, R], y in [0, R],
/// R = ||A|| + sqrt(eps) + 0.1 (nothing lies beyond ||A|| + sqrt(eps)).
GridSpec auto_box(const QMatrix& a, double eps, std::size_t nx = 401, std::size_t ny = 201);

/// s_min(Q_z(A)) sampled on a grid; values row-major by y then x.
struct ScalarField {
  GridSpec spec;
  std::vector<double> values;

  double at(std::size_t ix, std::size_t iy) const { return values[iy * spec.nx + ix]; }
  double min() const;
  double max() const;
};

/// Evaluates smin_at on every node z = x + iy. Rows are distributed over
/// `threads` workers (0 = hardware concurrency); the field is identical for any
/// thread count. Failing nodes are collected and reported together.
ScalarField grid_scan(const QMatrix& a, const GridSpec& spec, unsigned threads = 0);

/// Mirrors an upper half-plane field (y_min must be 0) across the real axis
/// into the full slice y in [-y_max, y_max]; the axis row is shared.
ScalarField reflect_to_full_slice(const ScalarField& upper);

/// Number of 4-connected components of nodes with value <= level.
std::size_t connected_components(const ScalarField& field, double level);

}  // namespace qps
