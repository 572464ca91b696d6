#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qps {

using complex = std::complex<double>;

/// Dense row-major complex matrix. Target of the quaternion embedding and
/// the storage the eigen/SVD kernels work in.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const complex> data() const { return data_; }

  CMatrix adjoint() const;
  double frobenius_norm() const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complex> data_;
};

/// Tuning knobs of the Hermitian Jacobi kernel.
struct JacobiOptions {
  double hermitian_tol = 1e-12;    ///< max ||H - H^H||_F / ||H||_F accepted
  double off_diagonal_tol = 1e-13; ///< stop when off(H)_F < tol * ||H||_F
  int max_sweeps = 60;
};

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// ascending. The input is symmetrized first. Throws DomainError for
/// non-square or non-Hermitian input, ConvergenceError past the sweep cap.
std::vector<double> hermitian_eigenvalues(const CMatrix& h, const JacobiOptions& opts = {});

/// Singular values of an arbitrary complex matrix, ascending, by one-sided
/// (Hestenes) Jacobi: rotations that implicitly diagonalize M^H M without
/// forming it, so small singular values keep absolute accuracy eps*||M||.
std::vector<double> complex_singular_values(const CMatrix& m, int max_sweeps = 60);

struct QrOptions {
  double deflation_tol = 1e-12;  ///< relative to ||E||_F
  int max_iterations_per_dim2 = 100;
};

/// All eigenvalues of a dense complex matrix: Householder reduction to upper
/// Hessenberg form, then shifted QR (Wilkinson shifts, Givens sweeps) with
/// deflation. Order follows the final Schur diagonal.
std::vector<complex> complex_eigenvalues(const CMatrix& e, const QrOptions& opts = {});

/// Reduction to upper Hessenberg form by Householder similarity transforms.
CMatrix hessenberg(const CMatrix& e);

}  // namespace qps
