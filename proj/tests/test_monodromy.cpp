#include <gtest/gtest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "trisect/monodromy.hpp"

using namespace trisect;
using testing_util::error_kind;

namespace {

Diagram synth(const IntMatrix& q, const IntMatrix& b, int extra, int p, int boundary) {
  return synthesize_diagram(q, b, static_cast<int>(b.rows()) + extra, p, boundary);
}

}  // namespace

TEST(QuotientBases, ZeroIntersection) {
  const QuotientBases qb = quotient_bases(Lattice(IntMatrix{{1}, {0}}), Lattice(IntMatrix{{0}, {1}}));
  EXPECT_EQ(qb.kappa.classes, (IntMatrix{{1}, {0}}));
  EXPECT_EQ(qb.lambda.classes, (IntMatrix{{0}, {1}}));
}

TEST(QuotientBases, EqualLattices) {
  const Lattice l(IntMatrix{{1}, {0}});
  const QuotientBases qb = quotient_bases(l, l);
  EXPECT_EQ(qb.kappa.size(), 0u);
  EXPECT_EQ(qb.lambda.size(), 0u);
}

TEST(QuotientBases, NestedLattices) {
  const QuotientBases qb =
      quotient_bases(Lattice(IntMatrix::identity(2)), Lattice(IntMatrix{{0}, {1}}));
  EXPECT_EQ(qb.kappa.classes, (IntMatrix{{1}, {0}}));
  EXPECT_EQ(qb.lambda.size(), 0u);
}

TEST(QuotientBases, NotDirectSummand) {
  // <(1,0),(0,2)> n <(0,1)> = <(0,2)>, which is not a summand of <(0,1)>.
  EXPECT_EQ(error_kind([] {
              quotient_bases(Lattice(IntMatrix{{1, 0}, {0, 2}}), Lattice(IntMatrix{{0}, {1}}));
            }),
            ErrorKind::NotDirectSummand);
}

TEST(ArcStep, ZeroPairingLeavesArcs) {
  const Diagram d = synth(IntMatrix(0, 0), IntMatrix{{1}}, 0, 0, 2);
  const QuotientBases qb = quotient_bases(Lattice(d.alpha.classes), Lattice(d.beta.classes));
  const ArcStep step = arc_step(d.surface, *d.arcs, qb);
  EXPECT_TRUE(step.r.is_zero());
  EXPECT_EQ(step.next, *d.arcs);
}

TEST(ArcStep, NotUnimodular) {
  const SurfaceModel s = build_surface_model(1, 1);
  QuotientBases qb{CurveSystem{IntMatrix{{1}, {0}}}, CurveSystem{IntMatrix{{0}, {2}}}};
  EXPECT_EQ(error_kind([&] { arc_step(s, ArcSystem{IntMatrix(2, 0)}, qb); }), ErrorKind::NotUnimodular);
}

TEST(Monodromy, WorkedAnnulusExample) {
  const Diagram d = synth(IntMatrix(0, 0), IntMatrix{{1}}, 0, 0, 2);
  const MonodromyResult m = monodromy_action(d);
  EXPECT_EQ(m.r[0], (IntMatrix{{0}}));
  EXPECT_EQ(m.r[1], (IntMatrix{{-1}}));
  EXPECT_EQ(m.r[2], (IntMatrix{{-1}}));
  // A_1 + D_1 in the basis (A_1, B_1, D_1)
  EXPECT_EQ(m.displacement, (IntMatrix{{1}, {0}, {1}}));
  ASSERT_TRUE(m.a_psi.has_value());
  EXPECT_EQ(*m.a_psi, (IntMatrix{{1}}));
}

TEST(Monodromy, ExtraSphereLeavesQBlock) {
  const Diagram d = synth(IntMatrix{{1}}, IntMatrix{{1}}, 0, 0, 2);
  const MonodromyResult m = monodromy_action(d);
  ASSERT_TRUE(m.a_psi.has_value());
  EXPECT_EQ(*m.a_psi, (IntMatrix{{1}}));
}

TEST(Monodromy, TrivialDiagram) {
  const MonodromyResult m = monodromy_action(synth(IntMatrix(0, 0), IntMatrix(0, 0), 0, 0, 1));
  EXPECT_EQ(m.displacement.cols(), 0u);
  ASSERT_TRUE(m.a_psi.has_value());
  EXPECT_EQ(m.a_psi->rows(), 0u);
}

TEST(Monodromy, InverseOfBOnCorpus) {
  const std::vector<IntMatrix> qs = {IntMatrix(0, 0), {{1}}, testing_util::hyperbolic(),
                                     {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}};
  struct Block { IntMatrix b; int p, boundary; };
  const std::vector<Block> blocks = {{{{1}}, 0, 2}, {{{-1}}, 0, 2}, {{{1, 1}, {0, 1}}, 0, 3},
                                     {{{1, 1}, {0, 1}}, 1, 1}, {{{2, 1}, {1, 1}}, 1, 1},
                                     {{{1, 0, 1}, {0, 1, 0}, {0, 1, 1}}, 1, 2}};
  for (const auto& q : qs)
    for (const auto& bl : blocks)
      for (int extra = 0; extra <= 2; ++extra) {
        const Diagram d = synth(q, bl.b, extra, bl.p, bl.boundary);
        const MonodromyResult m = monodromy_action(d);
        ASSERT_TRUE(m.a_psi.has_value());
        EXPECT_EQ(bl.b * *m.a_psi, IntMatrix::identity(bl.b.rows()))
            << bl.b.to_string() << " p=" << bl.p;
      }
}

TEST(Monodromy, UpdateInvariantAndDisjointness) {
  const Diagram d = synth(testing_util::hyperbolic(), IntMatrix{{1, 1}, {0, 1}}, 1, 1, 1);
  const MonodromyResult m = monodromy_action(d);
  for (int i = 0; i < 3; ++i) {
    const IntMatrix step = d.surface.to_relative * m.bases[i].kappa.classes * m.r[i].transpose();
    EXPECT_EQ(m.arc_history[i + 1].classes, m.arc_history[i].classes + step);
    EXPECT_TRUE(pairing_matrix(d.surface, m.arc_history[i + 1], d.system(i + 2)).is_zero()) << i;
  }
}

TEST(Monodromy, DisplacementIndependentOfLambdaBasis) {
  gen::Rng rng(61);
  const Diagram d = synth(IntMatrix{{1}}, IntMatrix{{1, 0, 1}, {0, 1, 0}, {0, 1, 1}}, 1, 1, 2);
  const MonodromyResult m = monodromy_action(d);
  ArcSystem arcs = *d.arcs;
  IntMatrix displacement(d.surface.rank, arcs.size());
  for (int i = 0; i < 3; ++i) {
    QuotientBases qb = m.bases[i];
    qb.lambda.classes = qb.lambda.classes * gen::random_unimodular(rng, qb.lambda.size());
    const ArcStep step = arc_step(d.surface, arcs, qb);
    displacement = displacement + qb.kappa.classes * step.r.transpose();
    arcs = step.next;
  }
  EXPECT_EQ(displacement, m.displacement);
}

TEST(Monodromy, MissingArcs) {
  Diagram d = synth(IntMatrix(0, 0), IntMatrix{{1}}, 0, 0, 2);
  d.arcs.reset();
  EXPECT_EQ(error_kind([&] { monodromy_action(d); }), ErrorKind::MissingArcs);
}

TEST(Monodromy, NoAPsiOutsideStandardPosition) {
  Diagram d = synth(IntMatrix{{1}}, IntMatrix{{1}}, 0, 0, 2);
  d.gamma.classes = d.gamma.classes * IntMatrix{{1, 1}, {0, 1}};
  EXPECT_TRUE(in_standard_position(d));
  d.beta.classes = d.beta.classes * IntMatrix{{0, 1}, {1, 0}};
  EXPECT_FALSE(in_standard_position(d));
  EXPECT_FALSE(monodromy_action(d).a_psi.has_value());
}
