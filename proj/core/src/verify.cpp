#include "qpseudo/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "qpseudo/error.hpp"
#include "qpseudo/named.hpp"
#include "qpseudo/spectral.hpp"

namespace qps {

namespace {

constexpr double kBand = 1e-8;

CheckReport make_report(std::string name, double residual, double tol, std::optional<Witness> witness = {},
                        std::string note = {}) {
  CheckReport r;
  r.name = std::move(name);
  r.max_residual = residual;
  r.tolerance = tol;
  r.passed = residual <= tol;
  r.witness = std::move(witness);
  r.note = std::move(note);
  return r;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

Quaternion random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Quaternion s;
  do {
    const double w = g(rng), x = g(rng), y = g(rng), z = g(rng);
    s = {w, x, y, z};
  } while (norm2(s) < 1e-6);
  return (1.0 / modulus(s)) * s;
}

double commutator_norm(const QMatrix& a) {
  const QMatrix as = adjoint(a);
  return operator_norm(as * a - a * as);
}

void require_normal(const QMatrix& a, const char* who) {
  const double nrm = operator_norm(a);
  if (commutator_norm(a) > 1e-10 * nrm * nrm)
    throw DomainError(std::string(who) + ": matrix is not normal (||A^*A - AA^*|| > 1e-10 ||A||^2)");
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::size_t random_dim(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> d(lo, hi);
  return d(rng);
}

}  // namespace

CheckReport check_normal_distance(const QMatrix& a, std::size_t samples, std::uint64_t seed) {
  require_normal(a, "check_normal_distance");
  std::mt19937_64 rng(seed);
  const double nrm = operator_norm(a);
  const SSpectrum spec = s_spectrum(a);
  const double tol = 1e-8 * (1.0 + nrm * nrm);

  double worst = 0.0;
  std::optional<Witness> witness;
  for (std::size_t i = 0; i < samples; ++i) {
    const Quaternion q = random_quaternion(rng, nrm + 1.0);
    const double s = smin_at(a, q);
    const double d = distance_formula_norm(spec, q);
    if (const double r = std::fabs(s - d); r >= worst) {
      worst = r;
      witness = Witness{q, {s, d}};
    }
  }
  return make_report("normal-distance", worst, tol, witness,
                     "classes: " + std::to_string(spec.classes.size()));
}

CheckReport check_selfadjoint_disks(const QMatrix& a, std::size_t samples, std::uint64_t seed) {
  if (max_entry_diff(a, adjoint(a)) > 1e-12 * (1.0 + a.frobenius_norm()))
    throw DomainError("check_selfadjoint_disks: matrix is not self-adjoint");
  std::mt19937_64 rng(seed);
  const double nrm = operator_norm(a);
  const SSpectrum spec = s_spectrum(a);
  std::vector<double> reals;
  for (const auto& c : spec.classes) reals.push_back(c.re());

  const double radius = nrm + 1.0;
  std::size_t disagreements = 0, banded = 0;
  std::optional<Witness> witness;
  for (std::size_t i = 0; i < samples; ++i) {
    const Quaternion q = random_quaternion(rng, radius);
    const double eps = log_uniform(rng, 1e-3, radius * radius);
    const double s = smin_at(a, q);
    double d2 = std::numeric_limits<double>::infinity();
    for (double r : reals) d2 = std::min(d2, (real_part(q) - r) * (real_part(q) - r) + imag_mag(q) * imag_mag(q));
    if (std::fabs(s - eps) <= kBand || std::fabs(d2 - eps) <= kBand) {
      ++banded;
      continue;
    }
    if (within_level(s, eps) != selfadjoint_membership(reals, q, eps)) {
      ++disagreements;
      if (!witness) witness = Witness{q, {eps, s, d2}};
    }
  }
  return make_report("selfadjoint-disks", static_cast<double>(disagreements), 0.0, witness,
                     "skipped in boundary band: " + std::to_string(banded));
}

std::optional<Witness> two_disk_mismatch(const QMatrix& p, std::span<const double> eps_values, std::size_t samples,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Quaternion> probes;
  for (const auto& c : s_spectrum(p).classes) probes.push_back(c.representative());
  std::uniform_real_distribution<double> re(-1.5, 2.5), im(-1.5, 1.5);
  for (std::size_t i = 0; i < samples; ++i) {
    const double w = re(rng), x = im(rng), y = im(rng), z = im(rng);
    probes.push_back({w, x, y, z});
  }

  const std::array<double, 2> centers{0.0, 1.0};
  for (double eps : eps_values) {
    for (const auto& q : probes) {
      const double s = smin_at(p, q);
      const double im2 = imag_mag(q) * imag_mag(q);
      const double d2 = std::min(real_part(q) * real_part(q), (real_part(q) - 1.0) * (real_part(q) - 1.0)) + im2;
      if (std::fabs(s - eps) <= kBand || std::fabs(d2 - eps) <= kBand) continue;
      if (within_level(s, eps) != selfadjoint_membership(centers, q, eps)) return Witness{q, {eps, s, d2}};
    }
  }
  return std::nullopt;
}

CheckReport check_projection_characterization(const QMatrix& p, std::size_t samples, std::uint64_t seed) {
  static constexpr std::array<double, 3> kEps{0.04, 0.25, 1.0};
  const std::size_t n = p.n();
  const QMatrix id = QMatrix::identity(n);
  const SSpectrum spec = s_spectrum(p);

  std::ostringstream classes;
  for (const auto& c : spec.classes) classes << " (" << fmt(c.re()) << ", " << fmt(c.im_mag()) << ")";

  if (max_entry_diff(p, QMatrix(n)) <= 1e-12 || max_entry_diff(p, id) <= 1e-12)
    return make_report("projection", 0.0, 0.0, std::nullopt,
                       "trivial projection, forward path skipped; sigma_S:" + classes.str());

  const double idempotence = operator_norm(p * p - p);
  const double asym = operator_norm(p - adjoint(p));
  if (idempotence <= 1e-12 && asym <= 1e-12) {
    const bool spec_ok = spec.classes.size() == 2 && spec.classes[0].near({0.0, 0.0}, 1e-8) &&
                         spec.classes[1].near({1.0, 0.0}, 1e-8);
    auto mismatch = two_disk_mismatch(p, kEps, samples, seed);
    const double residual = (spec_ok ? 0.0 : 1.0) + (mismatch ? 1.0 : 0.0);
    return make_report("projection", residual, 0.0, std::move(mismatch),
                       "forward: orthogonal projection; sigma_S:" + classes.str());
  }

  require_normal(p, "check_projection_characterization");
  if (auto mismatch = two_disk_mismatch(p, kEps, samples, seed))
    return make_report("projection", 0.0, 0.0, std::move(mismatch),
                       "converse: not a projection and the region differs from the two-disk law; sigma_S:" +
                           classes.str());
  return make_report("projection", idempotence, 1e-8, std::nullopt,
                     "converse: region matched the two-disk law at eps in {0.04, 0.25, 1}; ||P^2 - P|| = " +
                         fmt(idempotence));
}

CheckReport check_G1(const QMatrix& a, std::size_t samples, double tol, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double nrm = operator_norm(a);
  const SSpectrum spec = s_spectrum(a);
  double worst = 0.0;
  std::size_t skipped = 0;
  std::optional<Witness> witness;
  for (std::size_t i = 0; i < samples; ++i) {
    const Quaternion q = random_quaternion(rng, nrm + 1.0);
    const double s = smin_at(a, q);
    if (s < 1e-10) {
      ++skipped;
      continue;
    }
    const double d = distance_formula_norm(spec, q);
    if (const double r = std::fabs(s - d); r >= worst) {
      worst = r;
      witness = Witness{q, {s, d}};
    }
  }
  return make_report("g1", worst, tol, witness, "spectral points skipped: " + std::to_string(skipped));
}

double hyponormality_defect(const QMatrix& a) {
  const QMatrix as = adjoint(a);
  const QMatrix d = as * a - a * as;
  // Symmetrize so rounding noise on a near-zero commutator cannot look non-Hermitian.
  return hermitian_eigenvalues(complex_embedding(0.5 * (d + adjoint(d)))).front();
}

HyponormalForms hyponormal_example_forms() {
  const QMatrix t = hyponormal_truncation(12);
  const QMatrix t2 = t * t;
  const QMatrix d1 = adjoint(t) * t - t * adjoint(t);
  const QMatrix d2 = adjoint(t2) * t2 - t2 * adjoint(t2);

  std::vector<Quaternion> e1(12), x(12);
  e1[0] = 1.0;
  x[0] = 1.0;
  x[2] = -2.0;
  return {real_part(quadratic_form(d1, e1)), real_part(quadratic_form(d2, x))};
}

CheckReport check_hyponormal_example() {
  const HyponormalForms f = hyponormal_example_forms();
  const double residual = std::max(std::fabs(f.first_order - 3.0), std::fabs(f.second_order + 9.0));
  std::vector<Quaternion> x(12);
  x[0] = 1.0;
  x[2] = -2.0;
  return make_report("hyponormal/example", residual, 1e-10, Witness{Quaternion(1.0), {f.first_order, f.second_order}},
                     "<e1,(T*T-TT*)e1> = " + fmt(f.first_order) + ", <x,(T2*T2-T2T2*)x> = " + fmt(f.second_order) +
                         "; truncation defect (edge) = " + fmt(hyponormality_defect(hyponormal_truncation(12))));
}

CheckReport counterexample_perturbation() {
  const QMatrix t = nilpotent2();
  const QMatrix r = QMatrix::diagonal({Quaternion(0.0, 1.1), Quaternion::j()});
  const double eps = 1.1;
  const Quaternion q(0.0, 1.1);

  const double norm_r = operator_norm(r);
  const SSpectrum spec = s_spectrum(t + r);
  double dist = std::numeric_limits<double>::infinity();
  for (const auto& c : spec.classes)
    dist = std::min(dist, std::hypot(c.re() - 0.0, c.im_mag() - 1.1));
  const bool equals_spec_r = spec.classes.size() == 2 && spec.contains({0.0, 1.0}, 1e-8) &&
                             spec.contains({0.0, 1.1}, 1e-8);
  const bool real_absent = !spec.contains({1.1, 0.0}, 1e-8);
  const double s = smin_at(t, q);
  const bool member = pseudo_membership(t, q, eps);

  CheckReport rep = make_report("perturbation", std::max(std::fabs(norm_r - 1.1), dist), 1e-8,
                                Witness{q, {s, norm_r}},
                                "s_min(Q_q(T)) = " + fmt(s) + " > eps = 1.1; sigma_S(T+R) = S u 1.1S: " +
                                    (equals_spec_r ? "yes" : "no") + "; real 1.1 in sigma_S(T+R): " +
                                    (real_absent ? "no" : "yes"));
  rep.passed = rep.passed && equals_spec_r && real_absent && !member;
  return rep;
}

std::optional<Witness> translation_witness(const QMatrix& t, const Quaternion& lambda, double eps,
                                           const GridSpec& grid) {
  grid.validate();
  const QMatrix shifted = left_mult_matrix(lambda, t.n()) + t;
  double best = 0.0;
  std::optional<Witness> witness;
  for (std::size_t iy = 0; iy < grid.ny; ++iy)
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const Quaternion z(grid.x(ix), grid.y(iy));
      const double s1 = smin_at(shifted, z);
      const double s2 = smin_at(t, z - lambda);
      if ((s1 <= eps) == (s2 <= eps)) continue;
      const double margin = std::min(std::fabs(s1 - eps), std::fabs(s2 - eps));
      if (margin > best) {
        best = margin;
        witness = Witness{z, {s1, s2, margin}};
      }
    }
  if (best > 1e-6) return witness;
  return std::nullopt;
}

CheckReport counterexample_translation(std::optional<GridSpec> search_grid) {
  const QMatrix t = nilpotent2();
  const double eps = 1.1;
  const Quaternion lambda = Quaternion::i();
  const GridSpec grid = search_grid.value_or(auto_box(left_mult_matrix(lambda, 2) + t, eps));
  grid.validate();

  // Real translate: Q_z(1 + T) must equal Q_{z-1}(T) entrywise.
  const QMatrix plus_one = QMatrix::identity(2) + t;
  double operator_residual = 0.0;
  for (std::size_t iy = 0; iy < grid.ny; iy += 4)
    for (std::size_t ix = 0; ix < grid.nx; ix += 4) {
      const Quaternion z(grid.x(ix), grid.y(iy));
      operator_residual = std::max(operator_residual, max_entry_diff(q_poly(plus_one, z), q_poly(t, z - 1.0)));
    }
  const bool t21_left = pseudo_membership(plus_one, 2.1, eps);
  const bool t21_right = pseudo_membership(t, 1.1, eps);

  auto witness = translation_witness(t, lambda, eps, grid);
  const bool found = witness.has_value();
  CheckReport rep = make_report(
      "translation", operator_residual, 1e-12, std::move(witness),
      std::string("real translate r = 1 covariant (2.1 in Lambda(1+T): ") + (t21_left ? "yes" : "no") +
          ", 1.1 in Lambda(T): " + (t21_right ? "yes" : "no") + "); non-real translate lambda = i witness: " +
          (found ? "found" : "none"));
  rep.passed = rep.passed && found;
  return rep;
}

CheckReport reproduce_nilpotent_region(double eps, std::size_t samples, std::uint64_t seed) {
  if (!(eps > 0.0)) throw DomainError("reproduce_nilpotent_region: eps must be positive");
  std::mt19937_64 rng(seed);
  const QMatrix t = nilpotent2();
  const double radius = 1.0 + std::sqrt(eps) + 0.5;
  std::size_t mismatches = 0, banded = 0;
  std::optional<Witness> witness;
  for (std::size_t i = 0; i < samples; ++i) {
    const Quaternion q = random_quaternion(rng, radius);
    const double bound = std::pow(eps * (eps + 2.0 * std::fabs(real_part(q))), 0.25);
    if (std::fabs(modulus(q) - bound) <= 1e-9) {
      ++banded;
      continue;
    }
    if (pseudo_membership(t, q, eps) != (modulus(q) <= bound)) {
      ++mismatches;
      if (!witness) witness = Witness{q, {smin_at(t, q), modulus(q), bound}};
    }
  }
  return make_report("nilpotent-region", static_cast<double>(mismatches), 0.0, witness,
                     "eps = " + fmt(eps) + ", skipped in boundary band: " + std::to_string(banded));
}

EightShapeResult reproduce_eight_shape(std::size_t nx, std::size_t ny) {
  const Quaternion q(0.5, 0.1);
  const QMatrix l = left_mult_matrix(q, 1);

  const auto field_at = [&](double eps) { return grid_scan(l, auto_box(l, eps, nx, ny)); };
  const auto components = [&](const ScalarField& f, double eps) {
    return connected_components(reflect_to_full_slice(f), eps);
  };
  const auto axis_min = [](const ScalarField& f) {
    return *std::min_element(f.values.begin(), f.values.begin() + static_cast<std::ptrdiff_t>(f.spec.nx));
  };

  EightShapeResult out;
  out.figure_levels = {0.0125, 0.15, 0.005};
  for (double eps : out.figure_levels) {
    out.figures.push_back(field_at(eps));
    out.components.push_back(components(out.figures.back(), eps));
  }
  const ScalarField& f005 = out.figures[2];
  const ScalarField f02 = field_at(0.02);
  const ScalarField f015 = field_at(0.015);

  const std::size_t c005 = out.components[2];
  const std::size_t c02 = components(f02, 0.02);
  const bool empty005 = real_line_classifier(q, 0.005).shape == RealLineShape::empty;
  const bool nonempty015 = real_line_classifier(q, 0.015).shape == RealLineShape::nonempty_connected;
  const bool axis005 = axis_min(f005) > 0.005;
  const bool axis015 = axis_min(f015) <= 0.015;

  const int failed = (c005 != 2) + (c02 != 1) + !empty005 + !nonempty015 + !axis005 + !axis015;
  out.report = make_report("eight-shape", failed, 0.0, std::nullopt,
                           "components: eps=0.005 -> " + std::to_string(c005) + ", eps=0.02 -> " +
                               std::to_string(c02) + ", eps=0.0125 -> " + std::to_string(out.components[0]) +
                               ", eps=0.15 -> " + std::to_string(out.components[1]) +
                               "; real slice empty at 0.005: " + (empty005 && axis005 ? "yes" : "no") +
                               ", nonempty at 0.015: " + (nonempty015 && axis015 ? "yes" : "no"));
  if (failed) out.report.witness = Witness{q, {double(c005), double(c02)}};
  return out;
}

CheckReport check_disconnected_real_intersection() {
  const QMatrix a = disc_normal();
  const double eps = 0.25;
  const bool in1 = pseudo_membership(a, 1.0, eps);
  const bool in3 = pseudo_membership(a, 3.0, eps);
  const bool in2 = pseudo_membership(a, 2.0, eps);
  const double s2 = smin_at(a, 2.0);
  CheckReport rep = make_report("disconnected-real", std::fabs(s2 - 1.25), 1e-8,
                                Witness{Quaternion(2.0), {smin_at(a, 1.0), s2, smin_at(a, 3.0)}},
                                std::string("1 member: ") + (in1 ? "yes" : "no") + ", 3 member: " +
                                    (in3 ? "yes" : "no") + ", 2 member: " + (in2 ? "yes" : "no"));
  rep.passed = rep.passed && in1 && in3 && !in2;
  return rep;
}

CheckReport check_axial_symmetry(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  std::optional<Witness> witness;
  for (std::size_t i = 0; i < samples; ++i) {
    const QMatrix a = random_matrix(rng, random_dim(rng, 1, 4));
    const Quaternion q = random_quaternion(rng, 2.0);
    const Quaternion s = random_unit(rng);
    const Quaternion rotated = conj(s) * q * s;
    const double n = operator_norm(a);
    const double s1 = smin_at(a, q), s2 = smin_at(a, rotated);
    if (const double r = std::fabs(s1 - s2) / (1.0 + n * n); r >= worst) {
      worst = r;
      witness = Witness{q, {s1, s2}};
    }
  }
  return make_report("axial-symmetry", worst, 1e-12, witness);
}

CheckReport check_eps_monotonicity(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t violations = 0;
  std::optional<Witness> witness;
  for (std::size_t i = 0; i < samples; ++i) {
    const QMatrix a = random_matrix(rng, random_dim(rng, 1, 4));
    const Quaternion q = random_quaternion(rng, 2.0);
    double e1 = log_uniform(rng, 1e-3, 10.0), e2 = log_uniform(rng, 1e-3, 10.0);
    if (e1 > e2) std::swap(e1, e2);
    if (pseudo_membership(a, q, e1) && !pseudo_membership(a, q, e2)) {
      ++violations;
      if (!witness) witness = Witness{q, {e1, e2}};
    }
  }
  return make_report("eps-monotonicity", static_cast<double>(violations), 0.0, witness);
}

CheckReport check_spectrum_recovery(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  std::size_t off_spectrum_zero = 0;
  std::optional<Witness> witness;
  for (std::size_t i = 0; i < samples; ++i) {
    const QMatrix a = random_matrix(rng, random_dim(rng, 1, 4));
    const double n = operator_norm(a);
    const SSpectrum spec = s_spectrum(a);
    for (const auto& c : spec.classes) {
      const double s = smin_at(a, c);
      if (const double r = s / (1.0 + n * n); r >= worst) {
        worst = r;
        witness = Witness{c.representative(), {s}};
      }
    }
    // A point at distance >= 0.1 from every class is in the resolvent set.
    const Quaternion q = random_quaternion(rng, n + 1.0);
    const SimilarityClass cq = class_of(q);
    const bool far = std::all_of(spec.classes.begin(), spec.classes.end(), [&](const SimilarityClass& c) {
      return std::hypot(c.re() - cq.re(), c.im_mag() - cq.im_mag()) >= 0.1;
    });
    if (far && smin_at(a, q) <= 0.0) ++off_spectrum_zero;
  }
  CheckReport rep = make_report("spectrum-recovery", worst, 1e-8, witness,
                                "resolvent points with s_min = 0: " + std::to_string(off_spectrum_zero));
  rep.passed = rep.passed && off_spectrum_zero == 0;
  return rep;
}

CheckReport check_scaling(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.2, 3.0);
  std::bernoulli_distribution neg(0.5);
  double worst = 0.0;
  std::optional<Witness> witness;
  for (std::size_t i = 0; i < samples; ++i) {
    const QMatrix a = random_matrix(rng, random_dim(rng, 1, 4));
    const double r = neg(rng) ? -mag(rng) : mag(rng);
    const Quaternion q = random_quaternion(rng, 2.0);
    const double lhs = smin_at(r * a, q);
    const double rhs = r * r * smin_at(a, (1.0 / r) * q);
    const double rel = std::fabs(lhs - rhs) / std::max(std::max(lhs, rhs), 1e-300);
    if (rel >= worst) {
      worst = rel;
      witness = Witness{q, {r, lhs, rhs}};
    }
  }
  return make_report("scaling", worst, 1e-10, witness);
}

CheckReport check_real_translation(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> shift(-3.0, 3.0);
  double worst = 0.0;
  std::optional<Witness> witness;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t n = random_dim(rng, 1, 5);
    const QMatrix a = random_matrix(rng, n);
    const double r = shift(rng);
    const Quaternion q = random_quaternion(rng, 3.0);
    const double d = max_entry_diff(q_poly(r * QMatrix::identity(n) + a, q), q_poly(a, q - r));
    if (d >= worst) {
      worst = d;
      witness = Witness{q, {r, d}};
    }
  }
  return make_report("real-translation", worst, 1e-12, witness);
}

CheckReport check_direct_sum(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  std::optional<Witness> witness;
  for (std::size_t i = 0; i < samples; ++i) {
    const QMatrix a = random_matrix(rng, random_dim(rng, 1, 3));
    const QMatrix b = random_matrix(rng, random_dim(rng, 1, 3));
    const Quaternion q = random_quaternion(rng, 2.0);
    const double sum = smin_at(direct_sum(a, b), q);
    const double parts = std::min(smin_at(a, q), smin_at(b, q));
    if (const double r = std::fabs(sum - parts); r >= worst) {
      worst = r;
      witness = Witness{q, {sum, parts}};
    }
  }
  return make_report("direct-sum", worst, 1e-10, witness);
}

CheckReport check_bounding_box(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> excess(1e-3, 1.0);
  std::size_t violations = 0;
  std::optional<Witness> witness;
  for (std::size_t i = 0; i < samples; ++i) {
    const QMatrix a = random_matrix(rng, random_dim(rng, 1, 4));
    const double eps = log_uniform(rng, 1e-3, 4.0);
    const double bound = operator_norm(a) + std::sqrt(eps);
    const Quaternion q = (bound * (1.0 + excess(rng))) * random_unit(rng);
    if (pseudo_membership(a, q, eps)) {
      ++violations;
      if (!witness) witness = Witness{q, {eps, bound, smin_at(a, q)}};
    }
  }
  return make_report("bounding-box", static_cast<double>(violations), 0.0, witness);
}

CheckReport check_similarity_sandwich(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t violations = 0;
  std::optional<Witness> witness;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t n = random_dim(rng, 1, 4);
    const QMatrix a = random_matrix(rng, n);
    const QMatrix v = random_matrix(rng, n) + 2.0 * QMatrix::identity(n);
    const QMatrix vinv = inverse(v);
    const double k = operator_norm(v) * operator_norm(vinv);
    const QMatrix b = vinv * a * v;
    for (int j = 0; j < 8; ++j) {
      const Quaternion q = random_quaternion(rng, operator_norm(a) + 1.0);
      const double eps = log_uniform(rng, 1e-3, 4.0);
      const double sa = smin_at(a, q), sb = smin_at(b, q);
      // Lambda_{eps/k}(A) in Lambda_eps(B) in Lambda_{eps k}(A), with a rounding band.
      const double slack = 1e-9 * (1.0 + sa + sb);
      const bool bad = (sa <= eps / k - slack && sb > eps) || (sb <= eps - slack && sa > eps * k);
      if (bad) {
        ++violations;
        if (!witness) witness = Witness{q, {eps, k, sa, sb}};
      }
    }
  }
  return make_report("similarity-sandwich", static_cast<double>(violations), 0.0, witness);
}

CheckReport check_disk_union(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t violations = 0;
  std::optional<Witness> witness;
  for (std::size_t i = 0; i < samples; ++i) {
    const QMatrix a = random_normal(rng, random_dim(rng, 1, 4));
    const SSpectrum spec = s_spectrum(a);
    double d = std::numeric_limits<double>::infinity();
    for (const auto& c : spec.classes) d = std::min(d, c.im_mag());
    const Quaternion q = random_quaternion(rng, operator_norm(a) + 1.0);
    const double eps = log_uniform(rng, 1e-3, 4.0);
    if (!pseudo_membership(a, q, eps)) continue;
    double gap = std::numeric_limits<double>::infinity();
    for (const auto& c : spec.classes) gap = std::min(gap, std::fabs(real_part(q) - c.re()));
    if (gap > std::sqrt(eps + d * d) + 1e-9) {
      ++violations;
      if (!witness) witness = Witness{q, {eps, gap, d}};
    }
  }
  return make_report("disk-union", static_cast<double>(violations), 0.0, witness);
}

CheckReport check_spectral_radius_law(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  std::optional<Witness> witness;
  for (std::size_t i = 0; i < samples; ++i) {
    const QMatrix a = random_normal(rng, random_dim(rng, 1, 4));
    QMatrix p = a;
    for (int k = 0; k < 6; ++k) p = p * p;  // A^64
    const double gelfand = std::pow(operator_norm(p), 1.0 / 64.0);
    const double r = spectral_radius(a);
    const double rel = std::fabs(r - gelfand) / (1.0 + operator_norm(a));
    if (rel >= worst) {
      worst = rel;
      witness = Witness{Quaternion(r), {r, gelfand}};
    }
  }
  return make_report("spectral-radius", worst, 0.05, witness);
}

CheckReport check_triangular_closed_form(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0.0;
  std::optional<Witness> witness;
  for (std::size_t i = 0; i < samples; ++i) {
    const double l1r = u(rng), l1i = u(rng), l2r = u(rng), l2i = u(rng), zr = u(rng), zi = u(rng);
    const complex l1(l1r, l1i), l2(l2r, l2i), z(zr, zi);
    const Quaternion q = random_quaternion(rng, 3.0);
    const QMatrix a{{Quaternion::from_complex(l1), Quaternion::from_complex(z)},
                    {Quaternion(), Quaternion::from_complex(l2)}};
    const double closed = upper_triangular_smin(l1, l2, z, q);
    const double svd = smin_at(a, q);
    const double rel = std::fabs(closed - svd) / std::max(svd, 1e-300);
    if (rel >= worst) {
      worst = rel;
      witness = Witness{q, {closed, svd}};
    }
  }
  return make_report("triangular-closed-form", worst, 1e-10, witness);
}

std::vector<std::string> check_names() {
  return {"normal-distance",  "selfadjoint-disks", "projection",       "g1",
          "hyponormal",       "perturbation",      "translation",      "nilpotent-region",
          "eight-shape",      "disconnected-real", "axial-symmetry",   "eps-monotonicity",
          "spectrum-recovery", "scaling",          "real-translation", "direct-sum",
          "bounding-box",     "similarity-sandwich", "disk-union",     "spectral-radius",
          "triangular-closed-form"};
}

bool is_check_name(std::string_view name) {
  const auto names = check_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

CheckReport renamed(CheckReport r, const std::string& instance) {
  r.name += "/" + instance;
  return r;
}

}  // namespace

std::vector<CheckReport> run_check(std::string_view name, std::uint64_t seed, const std::optional<QMatrix>& matrix) {
  std::vector<CheckReport> out;
  std::mt19937_64 rng(seed);
  const Quaternion eight_q(0.5, 0.1);

  if (name == "normal-distance") {
    if (matrix) return {renamed(check_normal_distance(*matrix, 1000, seed), "input")};
    out.push_back(renamed(check_normal_distance(diagjk(), 1000, seed), "diagjk"));
    out.push_back(renamed(check_normal_distance(disc_normal(), 1000, seed), "disc-normal"));
    out.push_back(renamed(check_normal_distance(left_mult_matrix(eight_q, 3), 1000, seed), "leftmult"));
    for (std::size_t n = 2; n <= 6; n += 2)
      out.push_back(renamed(check_normal_distance(random_normal(rng, n), 1000, seed + n), "random-normal" + std::to_string(n)));
  } else if (name == "selfadjoint-disks") {
    if (matrix) return {renamed(check_selfadjoint_disks(*matrix, 2000, seed), "input")};
    out.push_back(renamed(check_selfadjoint_disks(QMatrix::diagonal({1.0, 2.0}), 2000, seed), "diag12"));
    out.push_back(renamed(check_selfadjoint_disks(random_hermitian(rng, 4), 2000, seed), "random-hermitian4"));
    out.push_back(renamed(check_selfadjoint_disks(proj2(), 2000, seed), "proj2"));
  } else if (name == "projection") {
    if (matrix) return {renamed(check_projection_characterization(*matrix, 2000, seed), "input")};
    out.push_back(renamed(check_projection_characterization(proj2(), 2000, seed), "proj2"));
    const QMatrix u = random_unitary(rng, 3);
    out.push_back(renamed(
        check_projection_characterization(u * QMatrix::diagonal({1.0, 1.0, 0.0}) * adjoint(u), 2000, seed),
        "random-rank2"));
    out.push_back(renamed(check_projection_characterization(QMatrix::identity(2), 2000, seed), "identity"));
    out.push_back(renamed(check_projection_characterization(QMatrix::diagonal({1.0, 0.5}), 2000, seed), "diag(1,0.5)"));
    out.push_back(renamed(check_projection_characterization(QMatrix::diagonal({1.0, -1.0}), 2000, seed), "diag(1,-1)"));
  } else if (name == "g1") {
    if (matrix) return {renamed(check_G1(*matrix, 1000, 1e-8, seed), "input")};
    const QMatrix normal = random_normal(rng, 4);
    const double n = operator_norm(normal);
    out.push_back(renamed(check_G1(normal, 1000, 1e-8 * (1.0 + n * n), seed), "random-normal4"));
    out.push_back(renamed(check_G1(left_mult_matrix(eight_q, 3), 1000, 1e-8, seed), "leftmult"));
    out.push_back(renamed(check_G1(diagjk(), 1000, 1e-8, seed), "diagjk"));
    CheckReport nil = check_G1(nilpotent2(), 1000, 1e-8, seed);
    nil.name = "g1/nilpotent2-not-G1";
    nil.note = "expected failure of the G1 identity (witness attached); " + nil.note;
    nil.passed = !nil.passed;
    out.push_back(std::move(nil));
  } else if (name == "hyponormal") {
    if (matrix) {
      const double defect = hyponormality_defect(*matrix);
      return {make_report("hyponormal/input", std::max(0.0, -defect), 1e-10, std::nullopt,
                          "smallest eigenvalue of A*A - AA* = " + fmt(defect))};
    }
    out.push_back(check_hyponormal_example());
    const double defect = hyponormality_defect(random_normal(rng, 3));
    out.push_back(make_report("hyponormal/normal-defect", std::fabs(defect), 1e-10, std::nullopt,
                              "defect = " + fmt(defect)));
  } else if (name == "perturbation") {
    out.push_back(counterexample_perturbation());
  } else if (name == "translation") {
    out.push_back(counterexample_translation());
  } else if (name == "nilpotent-region") {
    for (double eps : {0.05, 1.1, 3.0}) out.push_back(renamed(reproduce_nilpotent_region(eps, 2000, seed), fmt(eps)));
  } else if (name == "eight-shape") {
    out.push_back(reproduce_eight_shape().report);
  } else if (name == "disconnected-real") {
    out.push_back(check_disconnected_real_intersection());
  } else if (name == "axial-symmetry") {
    out.push_back(check_axial_symmetry(500, seed));
  } else if (name == "eps-monotonicity") {
    out.push_back(check_eps_monotonicity(500, seed));
  } else if (name == "spectrum-recovery") {
    out.push_back(check_spectrum_recovery(200, seed));
  } else if (name == "scaling") {
    out.push_back(check_scaling(500, seed));
  } else if (name == "real-translation") {
    out.push_back(check_real_translation(500, seed));
  } else if (name == "direct-sum") {
    out.push_back(check_direct_sum(500, seed));
  } else if (name == "bounding-box") {
    out.push_back(check_bounding_box(500, seed));
  } else if (name == "similarity-sandwich") {
    out.push_back(check_similarity_sandwich(100, seed));
  } else if (name == "disk-union") {
    out.push_back(check_disk_union(500, seed));
  } else if (name == "spectral-radius") {
    out.push_back(check_spectral_radius_law(100, seed));
  } else if (name == "triangular-closed-form") {
    out.push_back(check_triangular_closed_form(2000, seed));
  } else {
    throw DomainError("unknown check '" + std::string(name) + "'");
  }
  return out;
}

std::vector<CheckReport> run_suite(std::uint64_t seed) {
  std::vector<CheckReport> all;
  for (const auto& name : check_names()) {
    auto part = run_check(name, seed);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

}  // namespace qps
