#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qpseudo/error.hpp"
#include "qpseudo/qmatrix.hpp"

using namespace qps;

namespace {

// Smallest singular value of a real 2x2 matrix from trace/det of M^T M.
double smin_2x2(double a, double b, double c, double d) {
  const double s = a * a + b * b + c * c + d * d;
  const double p = std::fabs(a * d - b * c);
  return 0.5 * (std::sqrt(s + 2 * p) - std::sqrt(std::max(0.0, s - 2 * p)));
}

std::vector<Quaternion> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::vector<Quaternion> v(n);
  for (auto& q : v) q = random_quaternion(rng);
  return v;
}

}  // namespace

TEST(QMatrix, ConstructionAndShape) {
  EXPECT_THROW(QMatrix(0), DimensionError);
  EXPECT_THROW((QMatrix{{1.0, 2.0}, {3.0}}), DimensionError);
  const QMatrix a{{Quaternion::i(), 1.0}, {0.0, Quaternion::k()}};
  EXPECT_EQ(a.n(), 2u);
  EXPECT_EQ(a(0, 0), Quaternion::i());
}

TEST(QMatrix, AdjointExamples) {
  EXPECT_EQ(adjoint(QMatrix{{Quaternion::j()}}), QMatrix{{-Quaternion::j()}});
  const QMatrix a{{Quaternion::i(), 1.0}, {0.0, Quaternion::k()}};
  const QMatrix want{{-Quaternion::i(), 0.0}, {1.0, -Quaternion::k()}};
  EXPECT_EQ(adjoint(a), want);
  std::mt19937_64 rng(21);
  const QMatrix r = random_matrix(rng, 5);
  EXPECT_EQ(adjoint(adjoint(r)), r);
}

TEST(QMatrix, IdentityAndDimensionChecks) {
  std::mt19937_64 rng(22);
  const QMatrix a = random_matrix(rng, 4);
  EXPECT_EQ(identity(4) * a, a);
  EXPECT_EQ(a * identity(4), a);
  EXPECT_THROW(a + identity(3), DimensionError);
  EXPECT_THROW(a * identity(3), DimensionError);
}

TEST(QMatrix, ProductIsNotCommutative) {
  const QMatrix a{{Quaternion::i()}}, b{{Quaternion::j()}};
  EXPECT_EQ((a * b)(0, 0), Quaternion::k());
  EXPECT_EQ((b * a)(0, 0), -Quaternion::k());
}

TEST(QMatrix, AdjointIsTheHilbertAdjoint) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const QMatrix a = random_matrix(rng, 4);
    const auto x = random_vector(rng, 4), y = random_vector(rng, 4);
    // <x, A y> = <A^* x, y> with <u, v> = sum conj(u_r) v_r.
    Quaternion lhs, rhs;
    for (std::size_t r = 0; r < 4; ++r) {
      Quaternion ay, asx;
      for (std::size_t c = 0; c < 4; ++c) {
        ay += a(r, c) * y[c];
        asx += adjoint(a)(r, c) * x[c];
      }
      lhs += conj(x[r]) * ay;
      rhs += conj(asx) * y[r];
    }
    EXPECT_NEAR(modulus(lhs - rhs), 0.0, 1e-13);
  }
}

TEST(Embedding, Examples) {
  const CMatrix e = complex_embedding(QMatrix{{Quaternion::j()}});
  EXPECT_EQ(e(0, 0), complex(0));
  EXPECT_EQ(e(0, 1), complex(1));
  EXPECT_EQ(e(1, 0), complex(-1));
  EXPECT_EQ(e(1, 1), complex(0));
  EXPECT_EQ(complex_embedding(identity(3)), CMatrix::identity(6));

  const Quaternion q(0.3, -1.0, 2.0, 0.5);
  auto ev = complex_eigenvalues(complex_embedding(QMatrix{{q}}));
  std::sort(ev.begin(), ev.end(), [](complex a, complex b) { return a.imag() < b.imag(); });
  EXPECT_NEAR(ev[0].real(), 0.3, 1e-14);
  EXPECT_NEAR(ev[1].real(), 0.3, 1e-14);
  EXPECT_NEAR(ev[0].imag(), -imag_mag(q), 1e-14);
  EXPECT_NEAR(ev[1].imag(), imag_mag(q), 1e-14);
}

TEST(Embedding, HomomorphismAndAdjoint) {
  std::mt19937_64 rng(24);
  for (std::size_t n = 1; n <= 6; ++n) {
    const QMatrix a = random_matrix(rng, n), b = random_matrix(rng, n);
    const CMatrix diff = complex_embedding(a * b) - complex_embedding(a) * complex_embedding(b);
    EXPECT_LE(diff.frobenius_norm(), 1e-12 * operator_norm(a) * operator_norm(b) * double(n));
    EXPECT_EQ(complex_embedding(adjoint(a)), complex_embedding(a).adjoint());
    EXPECT_EQ(from_embedding(complex_embedding(a)), a);
  }
}

TEST(Embedding, SpectrumIsConjugationClosed) {
  std::mt19937_64 rng(25);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto ev = complex_eigenvalues(complex_embedding(random_matrix(rng, n)));
    for (const auto& l : ev) {
      double best = 1e300;
      for (const auto& m : ev) best = std::min(best, std::abs(m - std::conj(l)));
      EXPECT_LE(best, 1e-8);
    }
  }
}

TEST(Singular, PairsAreMatched) {
  std::mt19937_64 rng(26);
  for (std::size_t n = 1; n <= 6; ++n) {
    const QMatrix m = random_matrix(rng, n);
    const auto all = complex_singular_values(complex_embedding(m));
    ASSERT_EQ(all.size(), 2 * n);
    for (std::size_t i = 0; i < n; ++i)
      EXPECT_LE(std::fabs(all[2 * i] - all[2 * i + 1]), 1e-9 * std::max(all.back(), 1e-300));
    EXPECT_EQ(singular_values(m).size(), n);
  }
}

TEST(Singular, Examples) {
  const Quaternion q(1, 1, 1, 1);
  const auto sv = singular_values(left_mult_matrix(q, 1));
  ASSERT_EQ(sv.size(), 1u);
  EXPECT_NEAR(sv[0], 2.0, 1e-15);
  EXPECT_EQ(smallest_singular_value(QMatrix(3)), 0.0);
  EXPECT_NEAR(smallest_singular_value(QMatrix{{1.21, -2.2}, {0.0, 1.21}}), 0.5352675622050356, 1e-14);
}

TEST(Singular, RealTwoByTwoOracle) {
  std::mt19937_64 rng(27);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int t = 0; t < 500; ++t) {
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    const double want = smin_2x2(a, b, c, d);
    const double got = smallest_singular_value(QMatrix{{a, b}, {c, d}});
    EXPECT_NEAR(got, want, 1e-13 * (1 + std::fabs(a) + std::fabs(b) + std::fabs(c) + std::fabs(d)));
  }
}

TEST(Singular, CStarIdentity) {
  std::mt19937_64 rng(28);
  for (std::size_t n = 1; n <= 6; ++n) {
    const QMatrix a = random_matrix(rng, n);
    const double na = operator_norm(a);
    EXPECT_NEAR(operator_norm(adjoint(a) * a), na * na, 1e-10 * na * na);
  }
}

TEST(Singular, UnitaryHasUnitSingularValues) {
  std::mt19937_64 rng(29);
  const QMatrix u = random_unitary(rng, 5);
  EXPECT_LE(max_entry_diff(adjoint(u) * u, identity(5)), 1e-13);
  for (double s : singular_values(u)) EXPECT_NEAR(s, 1.0, 1e-13);
}

TEST(LeftMult, Model) {
  const Quaternion q(0.5, 0.1, -0.3, 2.0);
  EXPECT_EQ(left_mult_matrix(Quaternion::i(), 2), (QMatrix{{Quaternion::i(), 0.0}, {0.0, Quaternion::i()}}));
  EXPECT_NEAR(operator_norm(left_mult_matrix(q, 5)), modulus(q), 1e-14);
  EXPECT_EQ(adjoint(left_mult_matrix(q, 3)), left_mult_matrix(conj(q), 3));
}

TEST(Inverse, RecoversIdentityAndDetectsSingular) {
  std::mt19937_64 rng(30);
  for (std::size_t n = 1; n <= 6; ++n) {
    const QMatrix a = random_matrix(rng, n) + 2.0 * identity(n);
    EXPECT_LE(max_entry_diff(inverse(a) * a, identity(n)), 1e-12);
    EXPECT_LE(max_entry_diff(a * inverse(a), identity(n)), 1e-12);
  }
  EXPECT_THROW(inverse(QMatrix{{1.0, 2.0}, {2.0, 4.0}}), DomainError);
  EXPECT_THROW(inverse(QMatrix(2)), DomainError);
}

TEST(RandomEnsembles, NormalAndHermitian) {
  std::mt19937_64 rng(31);
  const QMatrix n = random_normal(rng, 5);
  EXPECT_LE(operator_norm(adjoint(n) * n - n * adjoint(n)), 1e-12 * operator_norm(n) * operator_norm(n));
  const QMatrix h = random_hermitian(rng, 4);
  EXPECT_EQ(adjoint(h), h);
  std::mt19937_64 a(7), b(7);
  EXPECT_EQ(random_matrix(a, 3), random_matrix(b, 3));
}

TEST(QuadraticForm, RealPartOfHermitianForm) {
  std::mt19937_64 rng(32);
  const QMatrix h = random_hermitian(rng, 3);
  const auto x = random_vector(rng, 3);
  const Quaternion f = quadratic_form(h, x);
  EXPECT_NEAR(imag_mag(f), 0.0, 1e-13);
  const QMatrix id = identity(3);
  double n2 = 0;
  for (const auto& v : x) n2 += norm2(v);
  EXPECT_NEAR(quadratic_form(id, x).w, n2, 1e-14);
}

TEST(DirectSum, BlockLayout) {
  const QMatrix a{{Quaternion::i()}};
  const QMatrix b{{1.0, 2.0}, {3.0, 4.0}};
  const QMatrix s = direct_sum(a, b);
  EXPECT_EQ(s.n(), 3u);
  EXPECT_EQ(s(0, 0), Quaternion::i());
  EXPECT_EQ(s(2, 1), Quaternion(3.0));
  EXPECT_EQ(s(0, 2), Quaternion());
}
