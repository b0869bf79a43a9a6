#include <gtest/gtest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "trisect/invariants.hpp"
#include "trisect/monodromy.hpp"
#include "trisect/standardize.hpp"

using namespace trisect;
using testing_util::dense;

namespace {

bool divides_chain(const std::vector<Integer>& f) {
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] % f[i - 1] != 0) return false;
  return true;
}

bool is_unimodular(const IntMatrix& m) { return m.rows() == m.cols() && abs(determinant(m)) == 1; }

struct Case {
  IntMatrix q;
  IntMatrix b;
  int k;
  int p;
  int boundary;
};

Case random_case(gen::Rng& rng) {
  Case c;
  c.p = static_cast<int>(rng.uniform(0, 1));
  c.boundary = static_cast<int>(rng.uniform(1, 3));
  const auto l = static_cast<std::size_t>(2 * c.p + c.boundary - 1);
  c.q = gen::random_unimodular_form(rng, static_cast<std::size_t>(rng.uniform(0, 3)));
  c.b = gen::random_unimodular(rng, l, 5);
  c.k = static_cast<int>(l) + static_cast<int>(rng.uniform(0, 1));
  return c;
}

// Random handle slides on all three systems plus a symplectic map of the handles.
Diagram scramble(gen::Rng& rng, const Diagram& d) {
  const auto n = static_cast<std::size_t>(d.params.curves());
  const IntMatrix v = gen::random_unimodular(rng, n, 8);
  const IntMatrix phi = testing_util::handle_map(d.surface, n, v, unimodular_inverse(v).transpose());
  Diagram s = d;
  s.alpha.classes = phi * d.alpha.classes * gen::random_unimodular(rng, n, 8);
  s.beta.classes = phi * d.beta.classes * gen::random_unimodular(rng, n, 8);
  s.gamma.classes = phi * d.gamma.classes * gen::random_unimodular(rng, n, 8);
  return s;
}

}  // namespace

TEST(Properties, SmithFactorizationAndDivisibility) {
  gen::Rng rng(101);
  for (int t = 0; t < 150; ++t) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto c = static_cast<std::size_t>(rng.uniform(1, 5));
    const IntMatrix m = gen::random_matrix(rng, r, c, 6);
    const SmithDecomposition s = smith_normal_form(m);
    ASSERT_EQ(s.U * m * s.V, s.S);
    EXPECT_TRUE(is_unimodular(s.U));
    EXPECT_TRUE(is_unimodular(s.V));
    const auto f = s.invariant_factors();
    EXPECT_TRUE(divides_chain(f));
    EXPECT_EQ(f, [&] {
      std::vector<Integer> o;
      for (const auto& x : oracle::invariant_factors(dense(m), r, c)) o.push_back(x);
      return o;
    }());
  }
}

TEST(Properties, HermiteAndKernel) {
  gen::Rng rng(102);
  for (int t = 0; t < 150; ++t) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto c = static_cast<std::size_t>(rng.uniform(1, 6));
    IntMatrix m = gen::random_matrix(rng, r, c, 5);
    if (rng.coin() && c > 1) m = hcat(m.block(0, 0, r, 1), m.block(0, 0, r, c - 1));
    const HermiteDecomposition h = hermite_columns(m);
    EXPECT_EQ(m * h.V, h.H);
    EXPECT_TRUE(is_unimodular(h.V));
    EXPECT_EQ(h.rank(), rank(m));
    const Lattice k = kernel_basis(m);
    EXPECT_EQ(k.rank(), c - rank(m));
    if (k.rank() > 0) {
      EXPECT_TRUE((m * k.basis()).is_zero());
      EXPECT_EQ(saturate(k).rank(), k.rank());
      EXPECT_EQ(smith_normal_form(k.basis()).invariant_factors(), std::vector<Integer>(k.rank(), 1));
    }
  }
}

TEST(Properties, DeterminantUnderUnimodularChange) {
  gen::Rng rng(103);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const IntMatrix m = gen::random_matrix(rng, n, n, 7);
    const IntMatrix u = gen::random_unimodular(rng, n);
    EXPECT_EQ(determinant(m), oracle::leibniz_det(dense(m)));
    EXPECT_EQ(abs(determinant(u * m)), abs(determinant(m)));
    const IntMatrix ui = unimodular_inverse(u);
    EXPECT_TRUE((u * ui).is_identity());
  }
}

TEST(Properties, FormInvariantsMatchOracleAndCongruence) {
  gen::Rng rng(104);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const IntMatrix q = gen::random_symmetric(rng, n, 4);
    const FormInvariants f = form_invariants(q);
    const auto [pos, neg] = oracle::inertia(dense(q));
    EXPECT_EQ(f.rank, static_cast<std::size_t>(pos + neg));
    EXPECT_EQ(f.signature, pos - neg);
    const IntMatrix u = gen::random_unimodular(rng, n);
    EXPECT_EQ(form_invariants(u.transpose() * q * u), f);
  }
}

TEST(Properties, OrthogonalSplitRecoversSummands) {
  gen::Rng rng(105);
  for (int t = 0; t < 200; ++t) {
    const auto n1 = static_cast<std::size_t>(rng.uniform(0, 4));
    const auto n2 = static_cast<std::size_t>(rng.uniform(0, 4));
    const IntMatrix m1 = gen::random_unimodular_form(rng, n1);
    const IntMatrix m2 = gen::random_symmetric(rng, n2, 5);
    IntMatrix w = IntMatrix::identity(n1 + n2);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = n1; j < n1 + n2; ++j) w(i, j) = rng.uniform(-3, 3);
    IntMatrix m = w.transpose() * direct_sum(m1, m2) * w;
    // The lower-right block may be perturbed asymmetrically.
    if (n2 > 1 && rng.coin()) m(n1, n1 + 1) += 1;
    const SplitResult r = orthogonal_split(m, n1);
    EXPECT_TRUE(is_unimodular(r.U));
    EXPECT_EQ(r.U.transpose() * m * r.U, direct_sum(r.M1, r.M2));
    EXPECT_EQ(r.M1, m1);
  }
}

TEST(Properties, SynthesizedDiagramsRoundTripThroughText) {
  gen::Rng rng(106);
  for (int t = 0; t < 60; ++t) {
    const Case c = random_case(rng);
    const Diagram d = synthesize_diagram(c.q, c.b, c.k, c.p, c.boundary);
    EXPECT_TRUE(validate(d).passed());
    const std::string text = serialize_diagram(d);
    const Diagram back = parse_diagram(text);
    EXPECT_EQ(back, d);
    EXPECT_EQ(serialize_diagram(back), text);
  }
}

TEST(Properties, StandardizeIsInvariantUnderScrambles) {
  gen::Rng rng(107);
  for (int t = 0; t < 40; ++t) {
    const Case c = random_case(rng);
    const Diagram d = synthesize_diagram(c.q, c.b, c.k, c.p, c.boundary);
    const Diagram s = scramble(rng, d);
    EXPECT_EQ(homology(s), homology(d));
    const StandardizationResult r = standardize(s);
    EXPECT_EQ(homology(r.standardized), homology(d));
    EXPECT_EQ(form_invariants(r.q), form_invariants(c.q));
    EXPECT_EQ(r.b_block, c.b);
    EXPECT_TRUE(r.checks.record_reproduces);
    EXPECT_TRUE(r.checks.gamma_normal_form);
    EXPECT_TRUE(r.checks.pairing_equals_qtilde);
    EXPECT_TRUE(r.checks.all_unimodular);
    ASSERT_TRUE(r.a_psi.has_value());
    EXPECT_TRUE((c.b * *r.a_psi).is_identity());
    EXPECT_EQ(r.record.apply(s), r.standardized);
  }
}

TEST(Properties, LinkingAsymmetryIsGammaSelfPairing) {
  gen::Rng rng(108);
  for (int t = 0; t < 40; ++t) {
    const Case c = random_case(rng);
    const Diagram d = synthesize_diagram(c.q, c.b, c.k, c.p, c.boundary);
    const LinkingMatrix lm = linking_matrix(d);
    EXPECT_TRUE(lm.symmetric_outside_arc_block);
    const IntMatrix gram = self_intersections(d.surface, d.gamma);
    const IntMatrix l = lm.matrix;
    const std::size_t n = gram.rows();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(l(i, j) - l(j, i), -gram(i, j));
  }
}

TEST(Properties, MonodromyInverseOfBlock) {
  gen::Rng rng(109);
  for (int t = 0; t < 60; ++t) {
    const Case c = random_case(rng);
    const Diagram d = synthesize_diagram(c.q, c.b, c.k, c.p, c.boundary);
    const MonodromyResult m = monodromy_action(d);
    ASSERT_TRUE(m.a_psi.has_value());
    EXPECT_TRUE((c.b * *m.a_psi).is_identity());
  }
}
