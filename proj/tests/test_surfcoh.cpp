#include "fixtures.hpp"
#include "oracles.hpp"

#include "raynaud/surfcoh.hpp"
#include "raynaud/theorems.hpp"

#include <gtest/gtest.h>

using namespace raynaud;
using fixtures::ps1;
using fixtures::ps2;
using fixtures::ps3;

namespace {

std::vector<std::pair<Integer, Integer>> pairs(const std::vector<PTerm>& terms) {
  std::vector<std::pair<Integer, Integer>> out;
  for (const auto& t : terms) out.emplace_back(t.mtw, t.t);
  return out;
}

using Pairs = std::vector<std::pair<Integer, Integer>>;

// The three-branch splitting, enumerated term by term.
Pairs lemma_oracle(const SurfaceParams& s, Integer n) {
  const Integer ell = s.ell(), p = s.p(), q = (p + 1) / ell;
  Pairs out;
  if (n < 0) {
    out.emplace_back(n, n);
    for (Integer i = 1; i < ell; ++i) out.emplace_back(-i * q, i * p + n);
    return out;
  }
  const Integer k = n / ell, r = n % ell;
  if (r == 0) {
    for (Integer i = 0; i < ell; ++i) out.emplace_back(k - i * q, i * p + n);
  } else {
    out.emplace_back(r + 1 + k - ell, n);
    for (Integer i = 1; i < ell; ++i) out.emplace_back(k + 1 - i * q, i * p + n);
  }
  return out;
}

}  // namespace

TEST(Decompose, Examples) {
  EXPECT_EQ(pairs(decompose(ps1(), -1)), (Pairs{{-1, -1}, {-1, 1}, {-2, 3}}));
  EXPECT_EQ(pairs(decompose(ps1(), 0)), (Pairs{{0, 0}, {-1, 2}, {-2, 4}}));
  EXPECT_EQ(pairs(decompose(ps3(), 1)), (Pairs{{-2, 1}, {0, 4}, {-1, 7}, {-2, 10}}));
}

TEST(Decompose, MatchesEnumerationOracle) {
  for (const auto& s : fixtures::sweep())
    for (Integer n = -40; n <= 60; ++n) EXPECT_EQ(pairs(decompose(s, n)), lemma_oracle(s, n));
}

TEST(Decompose, EigenMatchesOracle) {
  for (const auto& s : fixtures::sweep())
    for (Integer n = -40; n <= 60; ++n)
      for (Integer a : {1, 2, 5}) {
        Pairs expected;
        for (const auto& m : oracle::eigen_summands(s, n * a, n)) expected.emplace_back(m.mtw, m.t);
        EXPECT_EQ(pairs(decompose(s, n, {a, 1}, Splitting::Eigen)), expected);
      }
}

TEST(Decompose, SplittingsAgreeOnEdgeResidues) {
  for (const auto& s : fixtures::sweep())
    for (Integer n = -40; n <= 60; ++n) {
      const Integer r = floor_mod(n, s.ell());
      const bool edge = n == -1 || (n >= 0 && (r == 0 || r == s.ell() - 1));
      if (edge) {
        EXPECT_EQ(decompose(s, n), decompose(s, n, {}, Splitting::Eigen)) << n;
      }
    }
}

TEST(ReduceTerm, Examples) {
  const auto s = ps1();
  for (Integer t : {-5, 0, 7})
    for (int i = 0; i < 3; ++i) EXPECT_FALSE(reduce_term(s, PTerm{-1, t, 0}, i).has_value());
  auto slot = reduce_term(s, PTerm{-2, 3, 0}, 1);
  ASSERT_TRUE(slot.has_value());
  EXPECT_EQ(slot->sheaf, (TwistedSym{true, 0, 0}));
  EXPECT_EQ(slot->degree, 0);
  EXPECT_FALSE(reduce_term(s, PTerm{2, 5, 0}, 2).has_value());
  EXPECT_FALSE(reduce_term(s, PTerm{-3, 5, 0}, 0).has_value());
  auto pos = reduce_term(s, PTerm{2, 5, 0}, 1);
  ASSERT_TRUE(pos.has_value());
  EXPECT_EQ(pos->sheaf, (TwistedSym{false, 2, 5}));
  EXPECT_EQ(pos->degree, 1);
}

// chi(P, O_P(m) (x) N^t) from Riemann-Roch on P must match the push-forward bookkeeping.
TEST(ReduceTerm, TermChiMatchesRuledSurfaceRR) {
  for (const auto& s : fixtures::sweep())
    for (Integer m = -12; m <= 12; ++m)
      for (Integer t = -30; t <= 30; t += 2)
        EXPECT_EQ(evaluate_term(s, {m, t, 0}).chi, oracle::chi_P(s, m, t)) << m << "," << t;
}

TEST(HSurface, Examples) {
  const auto s = ps1();
  EXPECT_EQ(h_surface(s, 1, -1), Cert::exact(1));
  EXPECT_EQ(h_surface(s, 1, -2), Cert::exact(0));
  EXPECT_EQ(h_surface(s, 0, -5), Cert::exact(0));
}

TEST(H1Neg, Examples) {
  EXPECT_EQ(closed_form::h1neg(ps2(), -1), Cert::exact(1));
  EXPECT_EQ(h_surface(ps2(), 1, -1), Cert::exact(1));
  EXPECT_TRUE(h_surface(ps3(), 1, -2).is_nonzero());
  EXPECT_TRUE(closed_form::h1neg(ps3(), -2).is_nonzero());
  EXPECT_EQ(closed_form::h1neg(ps1(), -7), Cert::zero());
  EXPECT_EQ(h_surface(ps1(), 1, -7), Cert::zero());
}

TEST(H1Neg, ClosedFormEqualsEngine) {
  for (const auto& s : fixtures::sweep())
    for (Integer n = -30; n <= -1; ++n)
      EXPECT_EQ(h_surface(s, 1, n), closed_form::h1neg(s, n)) << s.p() << "," << s.ell() << " n=" << n;
}

TEST(HSurface, H0VanishesInNegativeDegree) {
  for (const auto& s : fixtures::sweep())
    for (Integer n = -40; n <= -1; ++n) EXPECT_TRUE(h_surface(s, 0, n).is_zero());
}

TEST(ChiX, Examples) {
  const auto s = ps1();
  const auto sc = surface_cohomology(s, -1);
  EXPECT_EQ(sc.chi, 3);
  ASSERT_TRUE(sc.all_exact());
  EXPECT_EQ(sc.h[0].lo() - sc.h[1].lo() + sc.h[2].lo(), sc.chi);
  EXPECT_EQ(chi_X(s, 0), surface_cohomology(s, 0).chi);
}

TEST(ChiX, ExactCellsSatisfyEulerCharacteristic) {
  for (Splitting split : {Splitting::Lemma, Splitting::Eigen})
    for (const auto& s : fixtures::sweep())
      for (Integer n = -30; n <= s.p() * (s.p() + 1) + 3 * s.ell(); ++n)
        for (Integer a : {1, 2}) {
          const auto sc = surface_cohomology(s, n, {a, 1}, split);
          EXPECT_EQ(sc.chi, chi_X(s, n, {a, 1}, split));
          if (sc.all_exact()) { EXPECT_EQ(sc.h[0].lo() - sc.h[1].lo() + sc.h[2].lo(), sc.chi); }
          // chi lies between the extreme alternating sums the certificates allow.
          if (sc.h[1].hi()) { EXPECT_LE(sc.h[0].lo() - *sc.h[1].hi() + sc.h[2].lo(), sc.chi); }
          if (sc.h[0].hi() && sc.h[2].hi()) {
            EXPECT_GE(*sc.h[0].hi() - sc.h[1].lo() + *sc.h[2].hi(), sc.chi);
          }
        }
}

// The eigensheaf splitting reproduces Riemann-Roch on X: chi(Z^n) is a
// quadratic polynomial in n with leading coefficient Z^2/2.
TEST(ChiX, EigenSplittingIsQuadratic) {
  for (const auto& s : fixtures::sweep()) {
    const Integer from = s.p() * (s.p() + 1);
    for (Integer a : {1, 2, 3}) {
      auto f = [&](Integer n) { return chi_X(s, n, {a, 1}, Splitting::Eigen); };
      EXPECT_TRUE(oracle::quadratic_on(f, -40, from + 3 * s.ell() + 6));
      for (Integer n = -10; n <= 10; ++n) EXPECT_EQ(f(n), oracle::chi_X(s, n, a, 1));
      // Second difference = Z^2 = a^2 E~^2 + 2 a deg N_ell.
      EXPECT_EQ(f(from + 2) - 2 * f(from + 1) + f(from), a * a * s.dD() / s.ell() + 2 * a * s.dNl());
    }
  }
}

TEST(Zab, Examples) {
  const auto z1 = zab_nonvanishing(ps1(), 1, 1);
  EXPECT_TRUE(z1.inclusion_fired);
  EXPECT_EQ(z1.cert, Cert::lower_bound(1));
  EXPECT_TRUE(zab_nonvanishing(ps2(), 2, 1).cert.is_nonzero());
  // b = ell - 1 with ell = p + 1 lands on i = 1, where S^{(p+1)/ell - 2} = S^{-1} is zero.
  const auto z3 = zab_nonvanishing(ps3(), 5, 3);
  EXPECT_FALSE(z3.inclusion_fired);
  EXPECT_TRUE(z3.summand.is_zero());
  EXPECT_EQ(z3.cert, h_surface(ps3(), 1, -1, {5, 3}));
  EXPECT_THROW(zab_nonvanishing(ps3(), 0, 1), std::invalid_argument);
  EXPECT_THROW(zab_nonvanishing(ps3(), 1, 4), std::invalid_argument);
}

TEST(Zab, InclusionNeverContradictsEngine) {
  for (const auto& s : fixtures::sweep())
    for (Integer a = 1; a <= 5; ++a)
      for (Integer b = 1; b < s.ell(); ++b) {
        const auto z = zab_nonvanishing(s, a, b);
        const Cert engine = h_surface(s, 1, -1, {a, b});
        if (z.inclusion_fired) { EXPECT_GE(engine.hi() ? *engine.hi() : z.cert.lo(), z.cert.lo()); }
      }
}
