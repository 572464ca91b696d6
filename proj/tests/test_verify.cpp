#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qpseudo/error.hpp"
#include "qpseudo/io.hpp"
#include "qpseudo/named.hpp"
#include "qpseudo/spectral.hpp"
#include "qpseudo/verify.hpp"

using namespace qps;

TEST(NormalDistance, PassesOnNormalRejectsNonNormal) {
  std::mt19937_64 rng(61);
  EXPECT_TRUE(check_normal_distance(random_normal(rng, 4), 300).passed);
  EXPECT_TRUE(check_normal_distance(diagjk(), 300).passed);
  EXPECT_THROW(check_normal_distance(nilpotent2(), 10), DomainError);
}

TEST(SelfAdjointDisks, PassesAndRejects) {
  std::mt19937_64 rng(62);
  EXPECT_TRUE(check_selfadjoint_disks(random_hermitian(rng, 4), 500).passed);
  EXPECT_TRUE(check_selfadjoint_disks(QMatrix::diagonal({1.0, 2.0}), 500).passed);
  EXPECT_THROW(check_selfadjoint_disks(nilpotent2(), 10), DomainError);
}

TEST(Projection, ForwardConverseAndTrivial) {
  const CheckReport fwd = check_projection_characterization(proj2());
  EXPECT_TRUE(fwd.passed);
  EXPECT_NE(fwd.note.find("forward"), std::string::npos);

  for (const QMatrix& p : {QMatrix::diagonal({1.0, 0.5}), QMatrix::diagonal({1.0, -1.0})}) {
    const CheckReport r = check_projection_characterization(p);
    EXPECT_NE(r.note.find("converse"), std::string::npos);
    ASSERT_TRUE(r.witness) << "converse must detect a two-disk mismatch";
  }

  const CheckReport triv = check_projection_characterization(identity(2));
  EXPECT_TRUE(triv.passed);
  EXPECT_NE(triv.note.find("trivial"), std::string::npos);
  EXPECT_NE(triv.note.find("(1, 0)"), std::string::npos);
}

TEST(Projection, TwoDiskMismatchSeparatesRegions) {
  const std::vector<double> eps{0.04, 0.25, 1.0};
  EXPECT_FALSE(two_disk_mismatch(proj2(), eps, 500));
  const auto w = two_disk_mismatch(QMatrix::diagonal({1.0, 0.5}), eps, 500);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->values.size(), 3u);
}

TEST(G1, NormalPassesNilpotentFails) {
  EXPECT_TRUE(check_G1(left_mult_matrix(Quaternion(0.5, 0.1), 3), 300, 1e-8).passed);
  EXPECT_TRUE(check_G1(diagjk(), 300, 1e-8).passed);
  const CheckReport nil = check_G1(nilpotent2(), 300, 1e-8);
  EXPECT_FALSE(nil.passed);
  ASSERT_TRUE(nil.witness);
  EXPECT_EQ(nil.witness->values.size(), 2u);
  // Documented point: s_min = sqrt(2) - 1 at q = 1 against the distance product 1.
  EXPECT_NEAR(smin_at(nilpotent2(), 1.0), std::sqrt(2.0) - 1.0, 1e-15);
  EXPECT_NEAR(distance_formula_norm(s_spectrum(nilpotent2()), 1.0), 1.0, 1e-7);
}

TEST(Hyponormal, ExampleForms) {
  const HyponormalForms f = hyponormal_example_forms();
  EXPECT_NEAR(f.first_order, 3.0, 1e-10);
  EXPECT_NEAR(f.second_order, -9.0, 1e-10);
  EXPECT_TRUE(check_hyponormal_example().passed);
}

TEST(Hyponormal, Defect) {
  std::mt19937_64 rng(63);
  EXPECT_NEAR(hyponormality_defect(random_normal(rng, 4)), 0.0, 1e-10);
  EXPECT_LT(hyponormality_defect(nilpotent2()), -0.5);
  EXPECT_NEAR(hyponormality_defect(hyponormal_truncation(12)), -3.0, 1e-10);
}

TEST(Counterexamples, Perturbation) {
  const CheckReport r = counterexample_perturbation();
  EXPECT_TRUE(r.passed) << r.note;
  ASSERT_TRUE(r.witness);
  EXPECT_NEAR(r.witness->values[0], 1.21, 1e-12);
  EXPECT_NEAR(r.witness->values[1], 1.1, 1e-12);
  const SSpectrum s = s_spectrum(nilpotent2() + QMatrix::diagonal({Quaternion(0, 1.1), Quaternion::j()}));
  EXPECT_FALSE(s.contains({1.1, 0.0}, 1e-8));
}

TEST(Counterexamples, Translation) {
  const CheckReport r = counterexample_translation();
  EXPECT_TRUE(r.passed) << r.note;
  ASSERT_TRUE(r.witness);
  EXPECT_GT(r.witness->values[2], 1e-6);

  const GridSpec coarse = auto_box(left_mult_matrix(Quaternion::i(), 2) + nilpotent2(), 1.1, 81, 41);
  EXPECT_FALSE(translation_witness(nilpotent2(), Quaternion(0.0), 1.1, coarse));
  EXPECT_FALSE(translation_witness(nilpotent2(), Quaternion(1.0), 1.1, coarse));
  EXPECT_TRUE(translation_witness(nilpotent2(), Quaternion::i(), 1.1, coarse));
}

TEST(NilpotentRegion, LawAndPoints) {
  for (double eps : {0.01, 0.5, 1.1, 4.0}) EXPECT_TRUE(reproduce_nilpotent_region(eps, 1000).passed) << eps;
  const QMatrix t = nilpotent2();
  EXPECT_FALSE(pseudo_membership(t, Quaternion(0, 1.1), 1.1));
  EXPECT_NEAR(std::pow(1.1 * 1.1, 0.25), 1.0488088481701516, 1e-15);
  EXPECT_TRUE(pseudo_membership(t, 1.1, 1.1));
  EXPECT_NEAR(std::pow(1.1 * (1.1 + 2.2), 0.25), 1.3803100696313728, 1e-15);
  for (double eps : {1e-6, 1.0}) EXPECT_TRUE(pseudo_membership(t, 0.0, eps));
  EXPECT_THROW(reproduce_nilpotent_region(0.0, 1), DomainError);
}

TEST(EightShape, TopologyAndFigures) {
  const EightShapeResult r = reproduce_eight_shape(201, 101);
  EXPECT_TRUE(r.report.passed) << r.report.note;
  ASSERT_EQ(r.figures.size(), 3u);
  EXPECT_EQ(r.figure_levels, (std::vector<double>{0.0125, 0.15, 0.005}));
  EXPECT_EQ(r.components[1], 1u);
  EXPECT_EQ(r.components[2], 2u);
  EXPECT_EQ(field_to_csv(reproduce_eight_shape(201, 101).figures[0]), field_to_csv(r.figures[0]));
}

TEST(DisconnectedReal, Passes) { EXPECT_TRUE(check_disconnected_real_intersection().passed); }

TEST(Properties, AllPassOnSmallSamples) {
  EXPECT_TRUE(check_axial_symmetry(100).passed);
  EXPECT_TRUE(check_eps_monotonicity(100).passed);
  EXPECT_TRUE(check_spectrum_recovery(50).passed);
  EXPECT_TRUE(check_scaling(100).passed);
  EXPECT_TRUE(check_real_translation(100).passed);
  EXPECT_TRUE(check_direct_sum(100).passed);
  EXPECT_TRUE(check_bounding_box(100).passed);
  EXPECT_TRUE(check_similarity_sandwich(30).passed);
  EXPECT_TRUE(check_disk_union(100).passed);
  EXPECT_TRUE(check_spectral_radius_law(30).passed);
  EXPECT_TRUE(check_triangular_closed_form(300).passed);
}

TEST(Suite, SeededRunsAreIdentical) {
  for (const char* name : {"normal-distance", "g1", "scaling"})
    EXPECT_EQ(reports_to_json(run_check(name, 99)), reports_to_json(run_check(name, 99))) << name;
  EXPECT_NE(reports_to_json(run_check("scaling", 1)), reports_to_json(run_check("scaling", 2)));
}

TEST(Suite, NamesAndDispatch) {
  for (const auto& n : check_names()) EXPECT_TRUE(is_check_name(n));
  EXPECT_FALSE(is_check_name("nope"));
  EXPECT_THROW(run_check("nope", 1), DomainError);
  const auto one = run_check("normal-distance", kDefaultSeed, diagjk());
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].passed);
  const auto g1 = run_check("g1", kDefaultSeed, nilpotent2());
  ASSERT_EQ(g1.size(), 1u);
  EXPECT_FALSE(g1[0].passed);
  EXPECT_TRUE(g1[0].witness);
}

TEST(Suite, FailingReportsCarryWitness) {
  for (const auto& r : run_suite()) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.note;
    if (!r.passed) EXPECT_TRUE(r.witness) << r.name;
  }
}
