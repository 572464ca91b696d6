#include "qpseudo/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qpseudo/error.hpp"

namespace qps {

bool within_level(double value, double level) {
  return value <= level + 8.0 * std::numeric_limits<double>::epsilon() * std::fabs(level);
}

bool SSpectrum::contains(const SimilarityClass& c, double tol) const {
  return std::any_of(classes.begin(), classes.end(), [&](const SimilarityClass& s) { return s.near(c, tol); });
}

std::vector<double> SSpectrum::reals(double tol) const {
  std::vector<double> out;
  for (const auto& c : classes)
    if (c.im_mag() <= tol) out.push_back(c.re());
  return out;
}

QMatrix q_poly(const QMatrix& a, const SimilarityClass& c) {
  const std::size_t n = a.n();
  QMatrix out = matmul(a, a);
  const double two_re = 2.0 * c.re();
  const double mod2 = c.re() * c.re() + c.im_mag() * c.im_mag();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col) out(r, col) -= two_re * a(r, col);
  for (std::size_t i = 0; i < n; ++i) out(i, i).w += mod2;
  return out;
}

double default_spectrum_tol(const QMatrix& a) { return 1e-8 * (1.0 + operator_norm(a)); }

SSpectrum s_spectrum(const QMatrix& a, double tol) {
  if (!(tol > 0.0)) throw DomainError("s_spectrum: tol must be positive");
  const std::vector<complex> eig = complex_eigenvalues(complex_embedding(a));

  std::vector<SimilarityClass> raw;
  raw.reserve(eig.size());
  for (const auto& e : eig) raw.push_back(class_of(e));
  std::sort(raw.begin(), raw.end(), [](const SimilarityClass& x, const SimilarityClass& y) {
    return x.re() != y.re() ? x.re() < y.re() : x.im_mag() < y.im_mag();
  });

  // Greedy clustering: each raw class joins the first cluster whose running
  // mean is within tol in both coordinates.
  struct Cluster {
    double re = 0.0, im = 0.0;
    int count = 0;
    SimilarityClass mean() const { return {re / count, im / count}; }
  };
  std::vector<Cluster> clusters;
  for (const auto& c : raw) {
    auto it = std::find_if(clusters.begin(), clusters.end(),
                           [&](const Cluster& cl) { return cl.mean().near(c, tol); });
    if (it == clusters.end()) {
      clusters.push_back({c.re(), c.im_mag(), 1});
    } else {
      it->re += c.re();
      it->im += c.im_mag();
      ++it->count;
    }
  }

  SSpectrum out;
  for (const auto& cl : clusters) out.classes.push_back(cl.mean());
  std::sort(out.classes.begin(), out.classes.end(), [](const SimilarityClass& x, const SimilarityClass& y) {
    return x.re() != y.re() ? x.re() < y.re() : x.im_mag() < y.im_mag();
  });
  return out;
}

SSpectrum s_spectrum(const QMatrix& a) { return s_spectrum(a, default_spectrum_tol(a)); }

double spectral_radius(const SSpectrum& s) {
  double r = 0.0;
  for (const auto& c : s.classes) r = std::max(r, c.modulus());
  return r;
}

double spectral_radius(const QMatrix& a) { return spectral_radius(s_spectrum(a)); }

double smin_at(const QMatrix& a, const SimilarityClass& c) { return smallest_singular_value(q_poly(a, c)); }

bool pseudo_membership(const QMatrix& a, const Quaternion& q, double eps) {
  if (!(eps > 0.0)) throw DomainError("pseudo_membership: eps must be positive");
  return within_level(smin_at(a, q), eps);
}

double epsilon_sphere_value(std::span<const SimilarityClass> k, const Quaternion& q) {
  const double re = real_part(q);
  const double mod2 = norm2(q);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : k) {
    const complex mu = c.slice();
    best = std::min(best, std::abs(mu * mu - 2.0 * re * mu + mod2));
  }
  return best;
}

bool epsilon_sphere_membership(std::span<const SimilarityClass> k, const Quaternion& q, double eps) {
  return within_level(epsilon_sphere_value(k, q), eps);
}

double distance_formula_norm(const SSpectrum& spec, const Quaternion& q) {
  const complex z = class_of(q).slice();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : spec.classes) {
    const complex mu = c.slice();
    best = std::min(best, std::abs(mu - z) * std::abs(mu - std::conj(z)));
  }
  return best;
}

double upper_triangular_smin(std::complex<double> l1, std::complex<double> l2, std::complex<double> z,
                             const Quaternion& q) {
  const SimilarityClass mu = class_of(q);
  const double re = mu.re();
  const double mod2 = re * re + mu.im_mag() * mu.im_mag();
  const auto qpoly = [&](complex l) { return l * l - 2.0 * re * l + mod2; };

  const double q1 = std::abs(qpoly(l1));
  const double q2 = std::abs(qpoly(l2));
  const double w = std::abs((l1 + l2) * z - 2.0 * re * z);
  const double s = q1 * q1 + q2 * q2 + w * w;  // s1^2 + s2^2
  const double p = q1 * q2;                     // s1 s2
  const double sum = std::sqrt(s + 2.0 * p);    // s1 + s2
  const double diff = std::sqrt(std::max(0.0, s - 2.0 * p));
  const double s_max = 0.5 * (sum + diff);
  // s_min = (sum - diff) / 2, rewritten as p / s_max to avoid cancellation.
  return s_max > 0.0 ? p / s_max : 0.0;
}

bool selfadjoint_membership(std::span<const double> spec_reals, const Quaternion& q, double eps) {
  const double re = real_part(q);
  const double im2 = q.x * q.x + q.y * q.y + q.z * q.z;
  return std::any_of(spec_reals.begin(), spec_reals.end(),
                     [&](double r) { return within_level((re - r) * (re - r) + im2, eps); });
}

RealLineClassification real_line_classifier(const Quaternion& q, double eps) {
  if (!(eps > 0.0)) throw DomainError("real_line_classifier: eps must be positive");
  const double im = imag_mag(q);
  if (!within_level(im * im, eps)) return {RealLineShape::empty, std::nullopt};
  return {RealLineShape::nonempty_connected, real_part(q)};
}

}  // namespace qps
