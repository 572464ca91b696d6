#include "qpseudo/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpseudo/error.hpp"

namespace qps {

namespace {

void require_same(const QMatrix& a, const QMatrix& b, const char* op) {
  if (a.n() != b.n())
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.n()) + " vs " +
                         std::to_string(b.n()) + ")");
}

}  // namespace

QMatrix::QMatrix(std::size_t n) : n_(n), data_(n * n) {
  if (n == 0) throw DimensionError("QMatrix: dimension must be positive");
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows) : QMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw DimensionError("QMatrix: rows must form a square");
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * n_));
    ++r;
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

QMatrix QMatrix::diagonal(std::span<const Quaternion> entries) {
  QMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

QMatrix QMatrix::diagonal(std::initializer_list<Quaternion> entries) {
  return diagonal(std::span<const Quaternion>(entries.begin(), entries.size()));
}

double QMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& q : data_) s += norm2(q);
  return std::sqrt(s);
}

QMatrix add(const QMatrix& a, const QMatrix& b) {
  require_same(a, b, "add");
  QMatrix out(a.n());
  for (std::size_t r = 0; r < a.n(); ++r)
    for (std::size_t c = 0; c < a.n(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

QMatrix sub(const QMatrix& a, const QMatrix& b) {
  require_same(a, b, "sub");
  QMatrix out(a.n());
  for (std::size_t r = 0; r < a.n(); ++r)
    for (std::size_t c = 0; c < a.n(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  require_same(a, b, "matmul");
  const std::size_t n = a.n();
  QMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Quaternion v = a(r, k);
      if (v == Quaternion{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += v * b(k, c);
    }
  return out;
}

QMatrix scale_real(double r, const QMatrix& a) {
  QMatrix out = a;
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) out(i, j) *= r;
  return out;
}

QMatrix adjoint(const QMatrix& a) {
  QMatrix out(a.n());
  for (std::size_t r = 0; r < a.n(); ++r)
    for (std::size_t c = 0; c < a.n(); ++c) out(c, r) = conj(a(r, c));
  return out;
}

QMatrix direct_sum(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.n() + b.n());
  for (std::size_t r = 0; r < a.n(); ++r)
    for (std::size_t c = 0; c < a.n(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.n(); ++r)
    for (std::size_t c = 0; c < b.n(); ++c) out(a.n() + r, a.n() + c) = b(r, c);
  return out;
}

double max_entry_diff(const QMatrix& a, const QMatrix& b) {
  require_same(a, b, "max_entry_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, modulus(a.entries()[i] - b.entries()[i]));
  return worst;
}

QMatrix inverse(const QMatrix& a) {
  const std::size_t n = a.n();
  QMatrix m = a;
  QMatrix inv = QMatrix::identity(n);
  const double scale = std::max(a.frobenius_norm(), 1e-300);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (norm2(m(r, col)) > norm2(m(piv, col))) piv = r;
    if (modulus(m(piv, col)) <= 1e-14 * scale) throw DomainError("inverse: matrix is singular to working precision");
    if (piv != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(piv, c), m(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }

    const Quaternion p = qps::inverse(m(col, col));
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) = p * m(col, c);
      inv(col, c) = p * inv(col, c);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Quaternion f = m(r, col);
      if (f == Quaternion{}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= f * m(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

CMatrix complex_embedding(const QMatrix& a) {
  const std::size_t n = a.n();
  CMatrix e(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Quaternion& q = a(r, c);
      const complex a1(q.w, q.x);
      const complex a2(q.y, q.z);
      e(r, c) = a1;
      e(r, n + c) = a2;
      e(n + r, c) = -std::conj(a2);
      e(n + r, n + c) = std::conj(a1);
    }
  return e;
}

QMatrix from_embedding(const CMatrix& e) {
  if (e.rows() != e.cols() || e.rows() % 2 != 0 || e.rows() == 0)
    throw DimensionError("from_embedding: expected a 2n x 2n matrix");
  const std::size_t n = e.rows() / 2;
  QMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const complex a1 = e(r, c);
      const complex a2 = e(r, n + c);
      a(r, c) = {a1.real(), a1.imag(), a2.real(), a2.imag()};
    }
  return a;
}

std::vector<double> singular_values(const QMatrix& m) {
  const std::vector<double> doubled = complex_singular_values(complex_embedding(m));
  std::vector<double> sv(m.n());
  for (std::size_t i = 0; i < sv.size(); ++i) sv[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return sv;
}

double smallest_singular_value(const QMatrix& m) { return singular_values(m).front(); }

double operator_norm(const QMatrix& m) { return singular_values(m).back(); }

QMatrix left_mult_matrix(const Quaternion& q, std::size_t n) {
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = q;
  return m;
}

Quaternion quadratic_form(const QMatrix& m, std::span<const Quaternion> x) {
  if (x.size() != m.n()) throw DimensionError("quadratic_form: vector length differs from matrix dimension");
  Quaternion acc;
  for (std::size_t r = 0; r < m.n(); ++r) {
    Quaternion row;
    for (std::size_t c = 0; c < m.n(); ++c) row += m(r, c) * x[c];
    acc += conj(x[r]) * row;
  }
  return acc;
}

Quaternion random_quaternion(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  const double w = u(rng), x = u(rng), y = u(rng), z = u(rng);
  return {w, x, y, z};
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double radius) {
  QMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = random_quaternion(rng, radius);
  return m;
}

QMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<std::vector<Quaternion>> cols(n, std::vector<Quaternion>(n));
  for (auto& col : cols)
    for (auto& v : col) {
      const double w = g(rng), x = g(rng), y = g(rng), z = g(rng);
      v = {w, x, y, z};
    }

  // Modified Gram-Schmidt with right scalars: v -= u <u, v>.
  for (std::size_t k = 0; k < n; ++k) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t j = 0; j < k; ++j) {
        Quaternion ip;
        for (std::size_t i = 0; i < n; ++i) ip += conj(cols[j][i]) * cols[k][i];
        for (std::size_t i = 0; i < n; ++i) cols[k][i] -= cols[j][i] * ip;
      }
    double nrm = 0.0;
    for (const auto& v : cols[k]) nrm += norm2(v);
    nrm = std::sqrt(nrm);
    for (auto& v : cols[k]) v *= 1.0 / nrm;
  }

  QMatrix u(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) u(r, c) = cols[c][r];
  return u;
}

QMatrix random_normal(std::mt19937_64& rng, std::size_t n, double scale) {
  const QMatrix u = random_unitary(rng, n);
  std::vector<Quaternion> d(n);
  for (auto& q : d) q = random_quaternion(rng, scale);
  return u * QMatrix::diagonal(d) * adjoint(u);
}

QMatrix random_hermitian(std::mt19937_64& rng, std::size_t n, double scale) {
  const QMatrix b = random_matrix(rng, n, scale);
  return b + adjoint(b);
}

}  // namespace qps
