#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "qpseudo/qmatrix.hpp"
#include "qpseudo/quaternion.hpp"

namespace qps {

/// Closed sublevel test value <= level, with a few ulps of slack so that
/// points on the boundary stay members despite rounding (0.1^2 vs 0.01).
bool within_level(double value, double level);

/// S-spectrum as a finite set of similarity classes, sorted lexicographically
/// by (re, im_mag). The S-resolvent set is its complement.
struct SSpectrum {
  std::vector<SimilarityClass> classes;

  bool contains(const SimilarityClass& c, double tol) const;
  /// Real points of the spectrum (classes with im_mag <= tol).
  std::vector<double> reals(double tol = 1e-8) const;
};

/// Q_c(A) = A^2 - 2 re A + (re^2 + im_mag^2) I. Depends on q only through its class.
QMatrix q_poly(const QMatrix& a, const SimilarityClass& c);
inline QMatrix q_poly(const QMatrix& a, const Quaternion& q) { return q_poly(a, class_of(q)); }

/// Default class-merging tolerance 1e-8 (1 + ||A||).
double default_spectrum_tol(const QMatrix& a);

/// Eigenvalues a + bi of the complex embedding mapped to classes (a, |b|),
/// clustered within tol. tol must be positive.
SSpectrum s_spectrum(const QMatrix& a, double tol);
SSpectrum s_spectrum(const QMatrix& a);

/// max |q| over the spectrum.
double spectral_radius(const SSpectrum& s);
double spectral_radius(const QMatrix& a);

/// s_min(Q_q(A)); zero on the S-spectrum.
double smin_at(const QMatrix& a, const SimilarityClass& c);
inline double smin_at(const QMatrix& a, const Quaternion& q) { return smin_at(a, class_of(q)); }

/// q in the eps-pseudo S-spectrum, i.e. s_min(Q_q(A)) <= eps (closed region).
bool pseudo_membership(const QMatrix& a, const Quaternion& q, double eps);

/// inf over mu in K of |mu^2 - 2 Re(q) mu + |q|^2|, evaluated in polynomial form.
double epsilon_sphere_value(std::span<const SimilarityClass> k, const Quaternion& q);
bool epsilon_sphere_membership(std::span<const SimilarityClass> k, const Quaternion& q, double eps);

/// inf over mu in spec of |(mu - z)(mu - conj z)|, z = Re q + i|Im q|, evaluated
/// in product form. Equals 1 / ||Q_q(T)^{-1}|| for normal T.
double distance_formula_norm(const SSpectrum& spec, const Quaternion& q);

/// Smallest singular value of Q_q([[l1, z], [0, l2]]) in closed form from the
/// trace and determinant of Q^* Q.
double upper_triangular_smin(std::complex<double> l1, std::complex<double> l2, std::complex<double> z,
                             const Quaternion& q);

/// Disk-union law for self-adjoint operators: some r with (Re q - r)^2 + |Im q|^2 <= eps.
bool selfadjoint_membership(std::span<const double> spec_reals, const Quaternion& q, double eps);

enum class RealLineShape { empty, nonempty_connected };

struct RealLineClassification {
  RealLineShape shape;
  std::optional<double> witness;  ///< a real member (Re q) when nonempty
};

/// Real-axis slice of the pseudo S-spectrum of left multiplication by q:
/// empty iff eps < |Im q|^2.
RealLineClassification real_line_classifier(const Quaternion& q, double eps);

}  // namespace qps
