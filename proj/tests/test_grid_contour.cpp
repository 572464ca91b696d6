#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "qpseudo/contour.hpp"
#include "qpseudo/error.hpp"
#include "qpseudo/grid.hpp"
#include "qpseudo/named.hpp"
#include "qpseudo/spectral.hpp"

using namespace qps;

namespace {

const Quaternion kEightQ(0.5, 0.1);

ScalarField eight_full_slice(double eps, std::size_t nx = 401, std::size_t ny = 201) {
  const QMatrix l = left_mult_matrix(kEightQ, 1);
  return reflect_to_full_slice(grid_scan(l, auto_box(l, eps, nx, ny)));
}

// Cassini ovals |z - a||z + a| = b^2 split into two loops iff b < a; here the
// foci are 0.5 +- 0.1i, so a = 0.1 and b^2 = eps.
std::size_t cassini_components(double eps) { return eps < 0.01 ? 2 : 1; }

}  // namespace

TEST(GridSpec, Validation) {
  EXPECT_NO_THROW((GridSpec{-1, 1, 0, 1, 2, 2}.validate()));
  EXPECT_THROW((GridSpec{1, -1, 0, 1, 2, 2}.validate()), DomainError);
  EXPECT_THROW((GridSpec{-1, 1, -0.5, 1, 2, 2}.validate()), DomainError);
  EXPECT_THROW((GridSpec{-1, 1, 0, 1, 1, 2}.validate()), DomainError);
  EXPECT_THROW(grid_scan(proj2(), GridSpec{-1, 1, 1, 1, 3, 3}), DomainError);
}

TEST(GridSpec, AutoBox) {
  const GridSpec g = auto_box(nilpotent2(), 1.1);
  const double r = 1.0 + std::sqrt(1.1) + 0.1;
  EXPECT_NEAR(g.x_min, -r, 1e-14);
  EXPECT_NEAR(g.x_max, r, 1e-14);
  EXPECT_EQ(g.y_min, 0.0);
  EXPECT_NEAR(g.y_max, r, 1e-14);
  EXPECT_EQ(g.nx, 401u);
  EXPECT_EQ(g.ny, 201u);
  EXPECT_THROW(auto_box(nilpotent2(), 0.0), DomainError);
}

TEST(GridScan, ZeroMatrixField) {
  const GridSpec g{-2, 2, 0, 2, 21, 11};
  const ScalarField f = grid_scan(QMatrix(2), g);
  for (std::size_t iy = 0; iy < g.ny; ++iy)
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
      const double x = g.x(ix), y = g.y(iy);
      EXPECT_NEAR(f.at(ix, iy), x * x + y * y, 1e-14);
    }
}

TEST(GridScan, LeftMultiplicationField) {
  const GridSpec g{-1, 2, 0, 1, 31, 11};
  const ScalarField f = grid_scan(left_mult_matrix(kEightQ, 2), g);
  const std::complex<double> mu(0.5, 0.1);
  for (std::size_t iy = 0; iy < g.ny; ++iy)
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
      const std::complex<double> z(g.x(ix), g.y(iy));
      EXPECT_NEAR(f.at(ix, iy), std::abs((z - mu) * (z - std::conj(mu))), 1e-13);
    }
}

TEST(GridScan, NilpotentNode) {
  const ScalarField f = grid_scan(nilpotent2(), GridSpec{-1, 1, 0, 1, 3, 2});
  EXPECT_NEAR(f.at(2, 0), std::sqrt(2.0) - 1.0, 1e-15);
}

TEST(GridScan, IndependentOfThreadCount) {
  const GridSpec g{-2, 2, 0, 2, 41, 23};
  const QMatrix a = disc_normal();
  const ScalarField one = grid_scan(a, g, 1);
  for (unsigned t : {2u, 3u, 8u}) EXPECT_EQ(grid_scan(a, g, t).values, one.values);
}

TEST(Reflect, MirrorsAcrossRealAxis) {
  const GridSpec g{-1, 1, 0, 1, 5, 4};
  const ScalarField up = grid_scan(nilpotent2(), g);
  const ScalarField full = reflect_to_full_slice(up);
  EXPECT_EQ(full.spec.ny, 7u);
  EXPECT_EQ(full.spec.y_min, -1.0);
  for (std::size_t iy = 0; iy < 4; ++iy)
    for (std::size_t ix = 0; ix < 5; ++ix) {
      EXPECT_EQ(full.at(ix, 3 + iy), up.at(ix, iy));
      EXPECT_EQ(full.at(ix, 3 - iy), up.at(ix, iy));
    }
  ScalarField off = up;
  off.spec.y_min = 0.5;
  EXPECT_THROW(reflect_to_full_slice(off), DomainError);
}

TEST(Components, EightShapeMatchesCassiniOracle) {
  for (double eps : {0.004, 0.005, 0.008, 0.012, 0.02, 0.05, 0.15})
    EXPECT_EQ(connected_components(eight_full_slice(eps), eps), cassini_components(eps)) << eps;
}

TEST(Components, EmptyBelowMinimum) {
  const ScalarField f = eight_full_slice(0.005);
  EXPECT_EQ(connected_components(f, f.min() * 0.5), 0u);
}

TEST(Contour, EightShapeLoops) {
  for (double eps : {0.005, 0.02, 0.15}) {
    const ContourSet c = contour_extract(eight_full_slice(eps), eps);
    EXPECT_EQ(c.polylines.size(), cassini_components(eps)) << eps;
    for (const auto& p : c.polylines) EXPECT_TRUE(p.closed);
  }
}

TEST(Contour, EmptyBelowFieldMinimum) {
  const ScalarField f = eight_full_slice(0.005);
  EXPECT_TRUE(contour_extract(f, f.min() * 0.5).polylines.empty());
  EXPECT_THROW(contour_extract(f, 0.0), DomainError);
}

TEST(Contour, ZeroMatrixGivesUnitCircle) {
  const GridSpec g = auto_box(QMatrix(1), 1.0, 201, 101);
  const ContourSet c = contour_extract(reflect_to_full_slice(grid_scan(QMatrix(1), g)), 1.0);
  ASSERT_EQ(c.polylines.size(), 1u);
  ASSERT_TRUE(c.polylines[0].closed);
  const double h = (g.x_max - g.x_min) / double(g.nx - 1);
  for (const auto& p : c.polylines[0].points) EXPECT_NEAR(std::hypot(p.x, p.y), 1.0, h * h);
}

TEST(Contour, HalfPlanePointsStayInRectangle) {
  const QMatrix a = nilpotent2();
  const GridSpec g = auto_box(a, 1.1, 101, 51);
  const ContourSet c = contour_extract(grid_scan(a, g), 1.1);
  ASSERT_FALSE(c.polylines.empty());
  for (const auto& p : c.polylines)
    for (const auto& pt : p.points) {
      EXPECT_GE(pt.y, 0.0);
      EXPECT_GE(pt.x, g.x_min);
      EXPECT_LE(pt.x, g.x_max);
      EXPECT_LE(pt.y, g.y_max);
    }
}

TEST(Contour, NilpotentBoundaryFollowsClosedForm) {
  const QMatrix a = nilpotent2();
  const double eps = 1.1;
  const GridSpec g = auto_box(a, eps, 401, 201);
  const ContourSet c = contour_extract(reflect_to_full_slice(grid_scan(a, g)), eps);
  ASSERT_EQ(c.polylines.size(), 1u);
  for (const auto& pt : c.polylines[0].points) {
    const double bound = std::pow(eps * (eps + 2 * std::fabs(pt.x)), 0.25);
    EXPECT_NEAR(std::hypot(pt.x, pt.y), bound, 2e-3);
  }
}
