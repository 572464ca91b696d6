#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpseudo/grid.hpp"
#include "qpseudo/qmatrix.hpp"

namespace qps {

/// A point and the quantities compared there.
struct Witness {
  Quaternion q;
  std::vector<double> values;
};

/// Outcome of one executable check. passed == (max_residual <= tolerance)
/// unless the check documents otherwise; failing reports carry a witness.
struct CheckReport {
  std::string name;
  bool passed = false;
  std::optional<Witness> witness;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string note;
};

constexpr std::uint64_t kDefaultSeed = 20240917;

// Operator-class theorems.

/// Normal T: s_min(Q_q(T)) equals the spectral distance product at random q.
/// Throws DomainError unless ||A^*A - AA^*|| <= 1e-10 ||A||^2.
CheckReport check_normal_distance(const QMatrix& a, std::size_t samples, std::uint64_t seed = kDefaultSeed);

/// Self-adjoint T: membership agrees with the union of circularized disks of
/// radius sqrt(eps) around the real spectrum, outside a 1e-8 boundary band.
CheckReport check_selfadjoint_disks(const QMatrix& a, std::size_t samples, std::uint64_t seed = kDefaultSeed);

/// Orthogonal projection <=> region is the two-disk union around {0, 1} at
/// eps in {0.04, 0.25, 1}. passed means the equivalence is consistent on this
/// input; the note says which branch ran.
CheckReport check_projection_characterization(const QMatrix& p, std::size_t samples = 2000,
                                              std::uint64_t seed = kDefaultSeed);

/// First point where membership disagrees with the two-disk law around {0, 1}
/// at one of the eps values, or nullopt when the law held everywhere probed.
std::optional<Witness> two_disk_mismatch(const QMatrix& p, std::span<const double> eps_values, std::size_t samples,
                                         std::uint64_t seed = kDefaultSeed);

/// G1 condition: max |s_min - distance product| over random q off the spectrum.
CheckReport check_G1(const QMatrix& a, std::size_t samples, double tol, std::uint64_t seed = kDefaultSeed);

/// Smallest eigenvalue of A^*A - AA^*; nonnegative iff A is hyponormal.
double hyponormality_defect(const QMatrix& a);

/// <x, (A^*A - AA^*) x> for A = T and A = T^2, T = hyponormal_truncation(12), at
/// x = e1 and x = e1 - 2 e3 respectively.
struct HyponormalForms {
  double first_order;
  double second_order;
};
HyponormalForms hyponormal_example_forms();
CheckReport check_hyponormal_example();

// Worked examples and counterexamples.

/// T = [[0,1],[0,0]], R = diag(1.1i, j), eps = 1.1, q = 1.1i: q lies in
/// sigma_S(T + R) but not in Lambda_eps(T), although ||R|| = eps.
CheckReport counterexample_perturbation();

/// Largest-margin grid point in the symmetric difference of
/// Lambda_eps(lambda + T) and lambda + Lambda_eps(T), where lambda + T means
/// left_mult_matrix(lambda, n) + T. nullopt when no node separates the sets
/// by more than 1e-6. values = {s_min(lambda + T), s_min(T) at z - lambda, margin}.
std::optional<Witness> translation_witness(const QMatrix& t, const Quaternion& lambda, double eps,
                                           const GridSpec& grid);

/// Real translates commute exactly with the construction (Q_q(r + T) =
/// Q_{q - r}(T)); a non-real translate (lambda = i) breaks it. Default grid is
/// the 401 x 201 auto box of i + T at eps = 1.1.
CheckReport counterexample_translation(std::optional<GridSpec> search_grid = std::nullopt);

/// Nilpotent 2x2: membership <=> |q| <= (eps (eps + 2|Re q|))^{1/4} at random q.
CheckReport reproduce_nilpotent_region(double eps, std::size_t samples, std::uint64_t seed = kDefaultSeed);

struct EightShapeResult {
  CheckReport report;
  std::vector<double> figure_levels;   ///< 0.0125, 0.15, 0.005 (figures A, B, C)
  std::vector<ScalarField> figures;    ///< upper half-plane fields, one per level
  std::vector<std::size_t> components; ///< components of the full slice per figure level
};

/// Left multiplication by 0.5 + 0.1i: two components at eps = 0.005, one at
/// eps = 0.02 (counted on the reflected full slice), empty real slice at 0.005,
/// nonempty at 0.015, plus the three figure datasets.
EightShapeResult reproduce_eight_shape(std::size_t nx = 401, std::size_t ny = 201);

/// diag(1 + j/2, 3 - (i+j)/(2 sqrt 2)) at eps = 1/4: 1 and 3 are members, 2 is not.
CheckReport check_disconnected_real_intersection();

// Elementary properties of the pseudo S-spectrum, on random matrices.

CheckReport check_axial_symmetry(std::size_t samples, std::uint64_t seed = kDefaultSeed);
CheckReport check_eps_monotonicity(std::size_t samples, std::uint64_t seed = kDefaultSeed);
CheckReport check_spectrum_recovery(std::size_t samples, std::uint64_t seed = kDefaultSeed);
CheckReport check_scaling(std::size_t samples, std::uint64_t seed = kDefaultSeed);
CheckReport check_real_translation(std::size_t samples, std::uint64_t seed = kDefaultSeed);
CheckReport check_direct_sum(std::size_t samples, std::uint64_t seed = kDefaultSeed);
CheckReport check_bounding_box(std::size_t samples, std::uint64_t seed = kDefaultSeed);
CheckReport check_similarity_sandwich(std::size_t samples, std::uint64_t seed = kDefaultSeed);
CheckReport check_disk_union(std::size_t samples, std::uint64_t seed = kDefaultSeed);
CheckReport check_spectral_radius_law(std::size_t samples, std::uint64_t seed = kDefaultSeed);
CheckReport check_triangular_closed_form(std::size_t samples, std::uint64_t seed = kDefaultSeed);

/// Check families selectable by name (the CLI's --only).
std::vector<std::string> check_names();
bool is_check_name(std::string_view name);

/// Runs one family on its default instances, or on `matrix` for the
/// families that take one (normal-distance, selfadjoint-disks, projection,
/// g1, hyponormal). Throws DomainError for an unknown name.
std::vector<CheckReport> run_check(std::string_view name, std::uint64_t seed,
                                   const std::optional<QMatrix>& matrix = std::nullopt);

/// Every family on its default instances.
std::vector<CheckReport> run_suite(std::uint64_t seed = kDefaultSeed);

}  // namespace qps
