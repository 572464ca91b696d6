#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

namespace qps {

/// Real quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  /// Embeds a complex number a + bi into the slice C_i.
  static constexpr Quaternion from_complex(std::complex<double> c) { return {c.real(), c.imag(), 0.0, 0.0}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double r) {
    w *= r; x *= r; y *= r; z *= r;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(double r, Quaternion a) { return a *= r; }
constexpr Quaternion operator*(Quaternion a, double r) { return a *= r; }

/// Hamilton product; i*j = k, j*i = -k.
constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return mul(p, q); }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double norm2(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
inline double modulus(const Quaternion& q) { return std::sqrt(norm2(q)); }
constexpr double real_part(const Quaternion& q) { return q.w; }
inline double imag_mag(const Quaternion& q) { return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z); }

/// Multiplicative inverse; q must be nonzero.
constexpr Quaternion inverse(const Quaternion& q) { return (1.0 / norm2(q)) * conj(q); }

/// Canonical representative re + i*im_mag (im_mag >= 0) of the similarity class
/// [q] = { Re q + m |Im q| : m unit imaginary }.
class SimilarityClass {
 public:
  constexpr SimilarityClass() = default;
  SimilarityClass(double re, double im) : re_(re), im_mag_(std::fabs(im)) {}

  constexpr double re() const { return re_; }
  constexpr double im_mag() const { return im_mag_; }

  /// Representative in the closed upper half-plane of C_i.
  std::complex<double> slice() const { return {re_, im_mag_}; }
  Quaternion representative() const { return {re_, im_mag_, 0.0, 0.0}; }
  double modulus() const { return std::hypot(re_, im_mag_); }

  bool near(const SimilarityClass& o, double tol = 1e-10) const {
    return std::fabs(re_ - o.re_) <= tol && std::fabs(im_mag_ - o.im_mag_) <= tol;
  }

  friend constexpr bool operator==(const SimilarityClass&, const SimilarityClass&) = default;

 private:
  double re_ = 0.0;
  double im_mag_ = 0.0;
};

inline SimilarityClass class_of(const Quaternion& q) { return {q.w, imag_mag(q)}; }
inline SimilarityClass class_of(std::complex<double> c) { return {c.real(), c.imag()}; }

/// True iff q lies (within tol per coordinate) on the 2-sphere [c].
inline bool in_circularization(const Quaternion& q, const SimilarityClass& c, double tol) {
  return std::fabs(q.w - c.re()) <= tol && std::fabs(imag_mag(q) - c.im_mag()) <= tol;
}

/// Parses "a+bi+cj+dk" style text ("0.5+0.1i", "-k", "3-0.35j+2e-3k", "2").
/// Throws ParseError.
Quaternion parse_quaternion(std::string_view text);

/// Inverse of parse_quaternion with round-trip precision.
std::string to_string(const Quaternion& q);

}  // namespace qps
