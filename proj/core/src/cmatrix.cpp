#include "qpseudo/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qpseudo/error.hpp"

namespace qps {

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("CMatrix product: inner dimensions differ");
  CMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const complex v = a(r, k);
      if (v == complex{}) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += v * b(k, c);
    }
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("CMatrix difference: shapes differ");
  CMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Smaller root of t^2 + 2 zeta t - 1 = 0.
double rotation_tangent(double zeta) {
  if (std::fabs(zeta) > 1e150) return 0.5 / zeta;
  const double t = 1.0 / (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
  return zeta < 0.0 ? -t : t;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const CMatrix& h, const JacobiOptions& opts) {
  if (h.rows() != h.cols()) throw DomainError("hermitian_eigenvalues: matrix is not square");
  const std::size_t n = h.rows();
  if (n == 0) return {};

  const double norm = h.frobenius_norm();
  if (norm == 0.0) return std::vector<double>(n, 0.0);
  const double asym = (h - h.adjoint()).frobenius_norm();
  if (asym > opts.hermitian_tol * norm)
    throw DomainError("hermitian_eigenvalues: ||H - H^H||_F / ||H||_F = " + std::to_string(asym / norm));

  CMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));

  int sweep = 0;
  for (;; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= opts.off_diagonal_tol * norm) break;
    if (sweep >= opts.max_sweeps)
      throw ConvergenceError("hermitian_eigenvalues: no convergence after " + std::to_string(sweep) + " sweeps",
                             off / norm);

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const complex g = a(p, q);
        const double ag = std::abs(g);
        if (ag == 0.0) continue;

        // Phase column/row q so that a(p,q) becomes the real number |g|.
        const complex e = g / ag;
        for (std::size_t k = 0; k < n; ++k) a(k, q) *= std::conj(e);
        for (std::size_t k = 0; k < n; ++k) a(q, k) *= e;
        a(q, q) = a(q, q).real();
        a(p, q) = ag;
        a(q, p) = ag;

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double t = rotation_tangent((aqq - app) / (2.0 * ag));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const complex arp = a(r, p);
          const complex arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
          a(p, r) = std::conj(a(r, p));
          a(q, r) = std::conj(a(r, q));
        }
        a(p, p) = app - t * ag;
        a(q, q) = aqq + t * ag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> complex_singular_values(const CMatrix& m, int max_sweeps) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<complex>> col(cols, std::vector<complex>(rows));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) col[c][r] = m(r, c);

  const double tol = std::max(1e-15, static_cast<double>(cols) * std::numeric_limits<double>::epsilon());
  int sweep = 0;
  double worst = 0.0;
  for (;; ++sweep) {
    bool rotated = false;
    worst = 0.0;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double alpha = 0.0, beta = 0.0;
        complex gamma = 0.0;
        for (std::size_t k = 0; k < rows; ++k) {
          alpha += std::norm(col[p][k]);
          beta += std::norm(col[q][k]);
          gamma += std::conj(col[p][k]) * col[q][k];
        }
        const double ag = std::abs(gamma);
        if (alpha == 0.0 || beta == 0.0 || ag <= tol * std::sqrt(alpha * beta)) continue;
        worst = std::max(worst, ag / std::sqrt(alpha * beta));
        rotated = true;

        const complex e = gamma / ag;
        const double t = rotation_tangent((beta - alpha) / (2.0 * ag));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < rows; ++k) {
          const complex xp = col[p][k];
          const complex xq = col[q][k] * std::conj(e);
          col[p][k] = c * xp - s * xq;
          col[q][k] = s * xp + c * xq;
        }
      }
    }
    if (!rotated) break;
    if (sweep + 1 >= max_sweeps)
      throw ConvergenceError("complex_singular_values: no convergence after " + std::to_string(max_sweeps) +
                                 " sweeps",
                             worst);
  }

  std::vector<double> sv(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    double s = 0.0;
    for (const auto& v : col[c]) s += std::norm(v);
    sv[c] = std::sqrt(s);
  }
  // A wide matrix has only rows() nonzero singular values; the zero columns
  // Hestenes leaves behind are exactly those extras.
  std::sort(sv.begin(), sv.end());
  if (cols > rows) sv.erase(sv.begin(), sv.begin() + static_cast<std::ptrdiff_t>(cols - rows));
  return sv;
}

CMatrix hessenberg(const CMatrix& e) {
  if (e.rows() != e.cols()) throw DimensionError("hessenberg: matrix is not square");
  const std::size_t n = e.rows();
  CMatrix a = e;
  std::vector<complex> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double tail = 0.0;
    for (std::size_t i = k + 2; i < n; ++i) tail += std::norm(a(i, k));
    if (tail == 0.0) continue;

    const complex x0 = a(k + 1, k);
    const double alpha = std::sqrt(tail + std::norm(x0));
    const complex phase = std::abs(x0) == 0.0 ? complex(1.0) : x0 / std::abs(x0);
    const std::size_t m = n - k - 1;
    v.assign(m, 0.0);
    v[0] = x0 + phase * alpha;
    for (std::size_t i = 1; i < m; ++i) v[i] = a(k + 1 + i, k);
    double vv = 0.0;
    for (const auto& vi : v) vv += std::norm(vi);
    const double beta = 2.0 / vv;

    // A <- (I - beta v v^H) A
    for (std::size_t c = 0; c < n; ++c) {
      complex dot = 0.0;
      for (std::size_t i = 0; i < m; ++i) dot += std::conj(v[i]) * a(k + 1 + i, c);
      dot *= beta;
      for (std::size_t i = 0; i < m; ++i) a(k + 1 + i, c) -= v[i] * dot;
    }
    // A <- A (I - beta v v^H)
    for (std::size_t r = 0; r < n; ++r) {
      complex dot = 0.0;
      for (std::size_t i = 0; i < m; ++i) dot += a(r, k + 1 + i) * v[i];
      dot *= beta;
      for (std::size_t i = 0; i < m; ++i) a(r, k + 1 + i) -= dot * std::conj(v[i]);
    }
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
  return a;
}

std::vector<complex> complex_eigenvalues(const CMatrix& e, const QrOptions& opts) {
  if (e.rows() != e.cols()) throw DimensionError("complex_eigenvalues: matrix is not square");
  const std::size_t n = e.rows();
  if (n == 0) return {};

  CMatrix h = hessenberg(e);
  const double tol = opts.deflation_tol * e.frobenius_norm();
  const long max_iter = static_cast<long>(opts.max_iterations_per_dim2) * static_cast<long>(n * n);

  struct Rot {
    double c;
    complex s;
  };
  std::vector<Rot> rots(n);

  long iter = 0;
  int since_deflation = 0;
  std::size_t hi = n - 1;
  while (hi > 0) {
    std::size_t lo = hi;
    while (lo > 0 && std::abs(h(lo, lo - 1)) > tol) --lo;
    if (lo > 0) h(lo, lo - 1) = 0.0;
    if (lo == hi) {
      --hi;
      since_deflation = 0;
      continue;
    }
    if (++iter > max_iter) {
      std::string block = "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
      throw ConvergenceError("complex_eigenvalues: QR iteration cap reached; unreduced block " + block,
                             std::abs(h(hi, hi - 1)));
    }

    // Wilkinson shift from the trailing 2x2 of the active block.
    const complex a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
    const complex half = 0.5 * (a - d);
    const complex disc = std::sqrt(half * half + b * c);
    const complex mu1 = 0.5 * (a + d) + disc;
    const complex mu2 = 0.5 * (a + d) - disc;
    complex mu = std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
    if (++since_deflation % 11 == 10) mu = d + complex(0.75 * std::abs(c), 0.25 * std::abs(c));

    for (std::size_t k = lo; k <= hi; ++k) h(k, k) -= mu;
    for (std::size_t k = lo; k < hi; ++k) {
      const complex x = h(k, k), y = h(k + 1, k);
      Rot g{1.0, 0.0};
      if (y != complex{}) {
        const double r = std::hypot(std::abs(x), std::abs(y));
        if (std::abs(x) == 0.0) {
          g = {0.0, std::conj(y) / std::abs(y)};
        } else {
          g = {std::abs(x) / r, (x / std::abs(x)) * std::conj(y) / r};
        }
      }
      rots[k] = g;
      for (std::size_t j = k; j <= hi; ++j) {
        const complex u = h(k, j), w = h(k + 1, j);
        h(k, j) = g.c * u + g.s * w;
        h(k + 1, j) = -std::conj(g.s) * u + g.c * w;
      }
    }
    for (std::size_t k = lo; k < hi; ++k) {
      const Rot g = rots[k];
      const std::size_t last = std::min(k + 2, hi);
      for (std::size_t i = lo; i <= last; ++i) {
        const complex u = h(i, k), w = h(i, k + 1);
        h(i, k) = u * g.c + w * std::conj(g.s);
        h(i, k + 1) = -u * g.s + w * g.c;
      }
    }
    for (std::size_t k = lo; k <= hi; ++k) h(k, k) += mu;
  }

  std::vector<complex> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = h(i, i);
  return eig;
}

}  // namespace qps
