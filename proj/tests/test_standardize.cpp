#include <gtest/gtest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "trisect/invariants.hpp"
#include "trisect/monodromy.hpp"
#include "trisect/standardize.hpp"

using namespace trisect;
using testing_util::error_kind;

namespace {

Diagram synth(const IntMatrix& q, const IntMatrix& b = IntMatrix(0, 0), int extra = 0, int p = 0,
              int boundary = 1) {
  return synthesize_diagram(q, b, static_cast<int>(b.rows()) + extra, p, boundary);
}

}  // namespace

TEST(OrthogonalSplit, NothingToSplit) {
  const SplitResult r = orthogonal_split(testing_util::hyperbolic(), 2);
  EXPECT_TRUE(r.U.is_identity());
  EXPECT_EQ(r.M2.rows(), 0u);
  EXPECT_EQ(r.M1, testing_util::hyperbolic());
}

TEST(OrthogonalSplit, ThreeByThree) {
  const IntMatrix m{{1, 0, 3}, {0, 1, 4}, {3, 4, 5}};
  const SplitResult r = orthogonal_split(m, 2);
  EXPECT_EQ(r.U, (IntMatrix{{1, 0, -3}, {0, 1, -4}, {0, 0, 1}}));
  // by hand: 5 - 3*3 - 4*4 = -20
  EXPECT_EQ(r.M2, (IntMatrix{{-20}}));
  EXPECT_EQ(r.U.transpose() * m * r.U, direct_sum(IntMatrix::identity(2), IntMatrix{{-20}}));
}

TEST(OrthogonalSplit, AlreadyOrthogonal) {
  const IntMatrix rest{{4, 7}, {-1, 3}};  // only the leading block must be symmetric
  const SplitResult r = orthogonal_split(direct_sum(IntMatrix::identity(2), rest), 2);
  EXPECT_TRUE(r.U.is_identity());
  EXPECT_EQ(r.M2, rest);
}

TEST(OrthogonalSplit, Errors) {
  EXPECT_EQ(error_kind([] { orthogonal_split(IntMatrix{{2, 1}, {1, 1}}, 1); }), ErrorKind::NotUnimodular);
  EXPECT_EQ(error_kind([] { orthogonal_split(IntMatrix{{1, 1}, {0, 1}}, 1); }), ErrorKind::SymmetryViolated);
  EXPECT_EQ(error_kind([] { orthogonal_split(IntMatrix(2, 3), 1); }), ErrorKind::DimensionMismatch);
}

TEST(Standardize, AlreadyStandardIsIdentity) {
  const Diagram d = synth(testing_util::hyperbolic(), IntMatrix{{1}}, 1, 0, 2);
  const StandardizationResult r = standardize(d);
  EXPECT_TRUE(r.record.empty());
  EXPECT_EQ(r.qtilde, direct_sum(direct_sum(IntMatrix{{1}}, testing_util::hyperbolic()), IntMatrix(1, 1)));
  EXPECT_EQ(r.standardized, d);
}

TEST(Standardize, SingleOneByHand) {
  const StandardizationResult r = standardize(synth(IntMatrix{{1}}));
  EXPECT_EQ(r.b_block.rows(), 0u);
  EXPECT_EQ(r.q, (IntMatrix{{1}}));
  EXPECT_EQ(r.qtilde, (IntMatrix{{1}}));
  EXPECT_EQ(r.standardized.gamma.classes, (IntMatrix{{-1}, {-1}}));
  EXPECT_EQ(r.b2, 1u);
  ASSERT_TRUE(r.form.has_value());
  EXPECT_EQ(r.form->signature, 1);
}

TEST(Standardize, RecoversGammaScramble) {
  gen::Rng rng(67);
  const IntMatrix b{{1, 0}, {1, 1}};
  const Diagram d = synth(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}, b, 2, 1, 1);
  const StandardizationResult base = standardize(d);
  for (int t = 0; t < 10; ++t) {
    Diagram s = d;
    s.gamma.classes = s.gamma.classes * gen::random_unimodular(rng, static_cast<std::size_t>(d.params.curves()), 25);
    const StandardizationResult r = standardize(s);
    EXPECT_EQ(r.qtilde, base.qtilde);
    EXPECT_EQ(r.standardized.gamma, d.gamma);
    EXPECT_TRUE(r.checks.record_reproduces);
    EXPECT_TRUE(is_homologically_torelli(r.record, s));
  }
}

TEST(Standardize, RecoversAlphaBetaMovedBySurfaceMap) {
  gen::Rng rng(71);
  const Diagram d = synth(testing_util::hyperbolic(), IntMatrix{{1}}, 1, 0, 2);
  const std::size_t n = static_cast<std::size_t>(d.params.curves());
  for (int t = 0; t < 10; ++t) {
    const IntMatrix v = gen::random_unimodular(rng, n);
    const IntMatrix phi = testing_util::handle_map(d.surface, n, v, unimodular_inverse(v).transpose());
    Diagram s = d;
    s.alpha.classes = phi * d.alpha.classes * gen::random_unimodular(rng, n);
    s.beta.classes = phi * d.beta.classes * gen::random_unimodular(rng, n);
    s.gamma.classes = phi * d.gamma.classes * gen::random_unimodular(rng, n);
    const StandardizationResult r = standardize(s);
    EXPECT_TRUE(r.checks.record_reproduces);
    EXPECT_TRUE(r.checks.pairing_equals_qtilde);
    EXPECT_TRUE(r.checks.gamma_normal_form);
    EXPECT_EQ(r.b_block, (IntMatrix{{1}}));
    EXPECT_EQ(form_invariants(r.q), form_invariants(testing_util::hyperbolic()));
    EXPECT_EQ(homology(r.standardized), homology(s));
  }
}

TEST(Standardize, RecordMatricesUnimodularAndReplay) {
  gen::Rng rng(73);
  const Diagram d = synth(testing_util::e8(), IntMatrix{{1, 1}, {0, 1}}, 1, 0, 3);
  Diagram s = d;
  s.gamma.classes = s.gamma.classes * gen::random_unimodular(rng, 11, 40);
  const StandardizationResult r = standardize(s);
  for (const RecordStep& step : r.record.steps) EXPECT_EQ(abs(determinant(step.matrix)), 1);
  const Diagram replay = r.record.apply(s);
  EXPECT_EQ(replay.alpha, r.standardized.alpha);
  EXPECT_EQ(replay.beta, r.standardized.beta);
  EXPECT_EQ(replay.gamma, r.standardized.gamma);
}

TEST(Standardize, KernelSplitSymmetry) {
  gen::Rng rng(79);
  const Diagram d = synth(testing_util::hyperbolic(), IntMatrix{{1, 1}, {0, 1}}, 2, 1, 1);
  Diagram s = d;
  s.gamma.classes = s.gamma.classes * gen::random_unimodular(rng, 6, 30);
  const StandardizationResult r = standardize(s);
  const std::size_t l = 2, b2 = r.b2;
  ASSERT_EQ(b2, 2u);
  const IntMatrix& m = r.kernel_split;
  for (std::size_t i = l; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) {
      EXPECT_EQ(m(j, i), m(i, j));
      if (i >= l + b2) EXPECT_EQ(m(j, i), 0);
    }
}

TEST(Standardize, PartialWhenQNotUnimodular) {
  // alpha . gamma = [[0,1],[1,2]] is unimodular but its H_2 block is [2].
  const SurfaceModel s = build_surface_model(2, 2);
  const StandardConfiguration cfg = standard_configuration(s, 0);
  TrisectionParams tp;
  tp.g = 2;
  tp.b = 2;
  tp.k = {1, 1, 1};
  const IntMatrix m{{0, 1}, {1, 2}};
  const Diagram d = make_diagram(tp, cfg.alpha.classes, cfg.beta.classes,
                                 normal_form_gamma(s, cfg, m, 1).classes, cfg.arcs.classes,
                                 cfg.eta.classes);
  ASSERT_TRUE(validate(d).passed());
  const StandardizationResult r = standardize(d);
  EXPECT_TRUE(r.checks.partial);
  EXPECT_FALSE(r.checks.monodromy_inverse.has_value());
  EXPECT_EQ(r.q, (IntMatrix{{2}}));
  EXPECT_EQ(r.qtilde, m);
  EXPECT_FALSE(r.notes.empty());
}

TEST(Standardize, RejectsInvalidDiagram) {
  Diagram d = synth(IntMatrix{{1}});
  d.beta.classes = 2 * d.beta.classes;
  EXPECT_EQ(error_kind([&] { standardize(d); }), ErrorKind::InvalidDiagram);
}

TEST(Standardize, RejectsNonzeroH1) {
  // alpha = beta = gamma = A_1: H_1 = Z.
  EXPECT_EQ(error_kind([] { standardize(testing_util::all_equal_diagram()); }), ErrorKind::H1NotZero);
}

TEST(Standardize, RejectsSharedAlphaBeta) {
  // k_1 > l: alpha and beta share a curve, so beta . alpha is singular.
  TrisectionParams tp;
  tp.g = 2;
  tp.k = {1, 0, 0};
  const IntMatrix alpha{{1, 0}, {0, 0}, {0, 1}, {0, 0}};
  const IntMatrix beta{{0, 0}, {1, 0}, {0, 1}, {0, 0}};
  const IntMatrix gamma{{0, -1}, {0, -1}, {-1, -1}, {-1, -1}};
  const Diagram d = make_diagram(tp, alpha, beta, gamma);
  ASSERT_TRUE(validate(d).passed());
  ASSERT_TRUE(homology(d).groups[1].is_zero());
  EXPECT_EQ(error_kind([&] { standardize(d); }), ErrorKind::NotNormalizable);
}

TEST(Compare, SelfIsEquivalent) {
  const Diagram d = synth(IntMatrix{{1}}, IntMatrix{{1}}, 0, 0, 2);
  const ComparisonReport r = torelli_compare(d, d);
  EXPECT_EQ(r.verdict, Verdict::Equivalent);
  ASSERT_TRUE(r.congruence.has_value());
  EXPECT_TRUE(r.congruence->is_identity());
  EXPECT_EQ(*r.certificate, d.gamma.classes);
}

TEST(Compare, ScrambledCopyIsEquivalent) {
  gen::Rng rng(83);
  const Diagram d = synth(IntMatrix{{1}}, IntMatrix{{1}}, 1, 0, 2);
  Diagram s = d;
  s.gamma.classes = s.gamma.classes * gen::random_unimodular(rng, 3, 20);
  const ComparisonReport r = torelli_compare(d, s);
  EXPECT_EQ(r.verdict, Verdict::Equivalent);
  EXPECT_EQ(*r.certificate, standardize(s).standardized.gamma.classes);
}

TEST(Compare, SignatureDiffers) {
  const ComparisonReport r = torelli_compare(synth(IntMatrix{{1}}), synth(IntMatrix{{-1}}));
  EXPECT_EQ(r.verdict, Verdict::NotEquivalent);
  EXPECT_EQ(verdict_line(r), "not equivalent: signature");
}

TEST(Compare, MonodromyDiffers) {
  const ComparisonReport r =
      torelli_compare(synth(IntMatrix{{1}}, IntMatrix{{1}}, 0, 0, 2), synth(IntMatrix{{1}}, IntMatrix{{-1}}, 0, 0, 2));
  EXPECT_EQ(verdict_line(r), "not equivalent: monodromy");
}

TEST(Compare, ParametersDiffer) {
  const ComparisonReport r = torelli_compare(synth(IntMatrix{{1}}), synth(IntMatrix{{1}}, IntMatrix(0, 0), 1));
  EXPECT_EQ(verdict_line(r), "not equivalent: parameters");
}

TEST(Compare, CongruentDefiniteForms) {
  // [[2,1],[1,1]] is congruent to I_2.
  const ComparisonReport r = torelli_compare(synth(IntMatrix::identity(2)), synth(IntMatrix{{2, 1}, {1, 1}}));
  EXPECT_EQ(r.verdict, Verdict::Equivalent);
  ASSERT_TRUE(r.congruence.has_value());
  const IntMatrix qy{{2, 1}, {1, 1}};
  EXPECT_EQ(r.congruence->transpose() * qy * *r.congruence, IntMatrix::identity(2));
}

TEST(Compare, IndefiniteByClassification) {
  // diag(1,-1) and [[1,2],[2,3]] are odd, indefinite, rank 2, signature 0.
  const ComparisonReport r = torelli_compare(synth(IntMatrix{{1, 0}, {0, -1}}), synth(IntMatrix{{1, 2}, {2, 3}}));
  EXPECT_EQ(r.verdict, Verdict::Equivalent);
}

TEST(Compare, LargeDefiniteInconclusive) {
  const IntMatrix i8 = IntMatrix::identity(8);
  const ComparisonReport r = torelli_compare(synth(i8), synth(testing_util::e8()));
  EXPECT_EQ(r.verdict, Verdict::NotEquivalent);  // parity differs
  EXPECT_EQ(r.reason, "parity");
  IntMatrix other = i8;
  other(0, 1) = other(1, 0) = 1;
  other(0, 0) = 2;
  const ComparisonReport r2 = torelli_compare(synth(i8), synth(other));
  EXPECT_EQ(r2.verdict, Verdict::Inconclusive);
}

TEST(Congruence, SearchFindsAndRejects) {
  const auto u = find_congruence(IntMatrix::identity(2), IntMatrix{{2, 1}, {1, 1}});
  ASSERT_TRUE(u.has_value());
  EXPECT_EQ(abs(determinant(*u)), 1);
  EXPECT_FALSE(find_congruence(IntMatrix{{1}}, IntMatrix{{-1}}).has_value());
  EXPECT_FALSE(find_congruence(IntMatrix::identity(5), IntMatrix::identity(5)).has_value());
}

TEST(Torelli, IdentityRecord) {
  EXPECT_TRUE(is_homologically_torelli(TransformationRecord{}, synth(IntMatrix{{1}})));
}

TEST(Torelli, GammaOnlyRecord) {
  TransformationRecord r;
  r.push(RecordTarget::Gamma, IntMatrix{{1, 1}, {0, 1}}, "slide");
  EXPECT_TRUE(is_homologically_torelli(r, synth(testing_util::hyperbolic())));
}

TEST(Torelli, MovingBetaIsNotTorelli) {
  const Diagram d = synth(IntMatrix{{1}});
  TransformationRecord r;
  IntMatrix phi = IntMatrix::identity(2);
  phi(0, 1) = 1;  // B_1 -> B_1 + A_1
  r.push(RecordTarget::Surface, phi, "twist");
  EXPECT_FALSE(is_homologically_torelli(r, d));
}

TEST(Torelli, DimensionMismatch) {
  TransformationRecord r;
  r.push(RecordTarget::Gamma, IntMatrix::identity(3), "wrong size");
  EXPECT_EQ(error_kind([&] { is_homologically_torelli(r, synth(IntMatrix{{1}})); }),
            ErrorKind::DimensionMismatch);
}

TEST(Record, RejectsNonUnimodular) {
  TransformationRecord r;
  EXPECT_EQ(error_kind([&] { r.push(RecordTarget::Alpha, IntMatrix{{2}}, "bad"); }), ErrorKind::NotUnimodular);
}

TEST(Record, RelativeActionPreservesPairing) {
  gen::Rng rng(89);
  const SurfaceModel s = build_surface_model(3, 3);
  for (int t = 0; t < 10; ++t) {
    const IntMatrix v = gen::random_unimodular(rng, 3);
    const IntMatrix phi = testing_util::handle_map(s, 3, v, unimodular_inverse(v).transpose());
    const IntMatrix rel = relative_action(s, phi);
    EXPECT_EQ(rel.transpose() * s.pairing * phi, s.pairing);
    EXPECT_EQ(rel * s.to_relative, s.to_relative * phi);
  }
}
