#pragma once

#include <cstddef>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "qpseudo/cmatrix.hpp"
#include "qpseudo/quaternion.hpp"

namespace qps {

/// Square dense quaternion matrix, row-major. Acts on column vectors from the
/// left; scalars act on vectors from the right (right quaternionic space).
class QMatrix {
 public:
  QMatrix() = default;
  /// n x n zero matrix; n >= 1.
  explicit QMatrix(std::size_t n);
  /// Row-major construction; throws DimensionError unless rows form a square.
  QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(std::span<const Quaternion> entries);
  static QMatrix diagonal(std::initializer_list<Quaternion> entries);

  std::size_t n() const { return n_; }
  Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  std::span<const Quaternion> entries() const { return data_; }

  double frobenius_norm() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Quaternion> data_;
};

QMatrix add(const QMatrix& a, const QMatrix& b);
QMatrix sub(const QMatrix& a, const QMatrix& b);
QMatrix matmul(const QMatrix& a, const QMatrix& b);
QMatrix scale_real(double r, const QMatrix& a);
QMatrix adjoint(const QMatrix& a);
inline QMatrix identity(std::size_t n) { return QMatrix::identity(n); }

inline QMatrix operator+(const QMatrix& a, const QMatrix& b) { return add(a, b); }
inline QMatrix operator-(const QMatrix& a, const QMatrix& b) { return sub(a, b); }
inline QMatrix operator*(const QMatrix& a, const QMatrix& b) { return matmul(a, b); }
inline QMatrix operator*(double r, const QMatrix& a) { return scale_real(r, a); }

/// Block diagonal a (+) b.
QMatrix direct_sum(const QMatrix& a, const QMatrix& b);

/// Largest entrywise quaternion modulus of a - b.
double max_entry_diff(const QMatrix& a, const QMatrix& b);

/// Inverse by Gauss-Jordan elimination with partial pivoting (row operations
/// are left multiplications). Throws DomainError when singular to working
/// precision.
QMatrix inverse(const QMatrix& a);

/// Complex adjoint representation. With a = a1 + a2 j (a1 = w + xi,
/// a2 = y + zi) entrywise, returns [[A1, A2], [-conj(A2), conj(A1)]].
/// Multiplicative and *-preserving.
CMatrix complex_embedding(const QMatrix& a);

/// Inverse of complex_embedding on its image (reads the top block row).
QMatrix from_embedding(const CMatrix& e);

/// Singular values, ascending, one per multiplicity-2 pair of the embedding
/// (adjacent pairs averaged).
std::vector<double> singular_values(const QMatrix& m);
double smallest_singular_value(const QMatrix& m);
double operator_norm(const QMatrix& m);

/// Finite model of the left multiplication operator x -> q x: diag(q, ..., q).
QMatrix left_mult_matrix(const Quaternion& q, std::size_t n);

/// x^* M x for a column vector x.
Quaternion quadratic_form(const QMatrix& m, std::span<const Quaternion> x);

// Random ensembles used by the property checks.

Quaternion random_quaternion(std::mt19937_64& rng, double radius = 1.0);
QMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double radius = 1.0);
/// Haar-ish unitary from Gram-Schmidt on a Gaussian matrix (U^* U = I).
QMatrix random_unitary(std::mt19937_64& rng, std::size_t n);
/// U diag(q_1..q_n) U^* with Gaussian-ish eigen-entries of the given scale.
QMatrix random_normal(std::mt19937_64& rng, std::size_t n, double scale = 1.0);
/// B + B^*.
QMatrix random_hermitian(std::mt19937_64& rng, std::size_t n, double scale = 1.0);

}  // namespace qps
