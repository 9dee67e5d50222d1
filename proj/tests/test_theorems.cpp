#include "fixtures.hpp"

#include "raynaud/theorems.hpp"

#include <gtest/gtest.h>

using namespace raynaud;
using fixtures::ps1;
using fixtures::ps3;
using fixtures::ps4;

namespace {

std::string label(const SurfaceParams& s) {
  return std::to_string(s.p()) + "," + std::to_string(s.g()) + "," + std::to_string(s.dD()) + "," +
         std::to_string(s.e()) + "," + std::to_string(s.ell()) + "," + to_string(s.structure());
}

}  // namespace

TEST(Result1, LowerEnd) {
  EXPECT_EQ(result1_lower_end(ps1()), -1);
  EXPECT_EQ(result1_lower_end(ps3()), -2);
  EXPECT_EQ(result1_lower_end(fixtures::ps2()), -1);
}

TEST(Result1, RaynaudNonVanishing) {
  EXPECT_EQ(h_surface(ps1(), 1, -1), Cert::exact(1));
  EXPECT_TRUE(h_surface(ps3(), 1, -1).is_nonzero());
  EXPECT_TRUE(h_surface(ps3(), 1, -2).is_nonzero());
}

TEST(H0Refined, PreTangoCharFive) {
  EXPECT_EQ(h_surface(ps4(), 0, 1), Cert::zero());
  for (const auto& rec : surface_cohomology(ps4(), 1).terms) EXPECT_TRUE(rec.h[0].is_zero());
}

TEST(Predicates, NamedTuplesPassOutright) {
  for (const auto& s : fixtures::named()) {
    const auto rep = theorem_predicates(s);
    EXPECT_EQ(rep.count(TheoremCheck::Status::Contradicted), 0u) << label(s);
    EXPECT_EQ(rep.count(TheoremCheck::Status::EngineWeaker), 0u) << label(s);
    EXPECT_NO_THROW(require_theorems(rep));
  }
}

TEST(Predicates, SweepHasNoContradiction) {
  for (const auto& s : fixtures::sweep()) {
    const auto rep = theorem_predicates(s);
    EXPECT_FALSE(rep.contradicted()) << label(s);
    EXPECT_EQ(rep.count(TheoremCheck::Status::EngineWeaker), 0u) << label(s);
    for (const auto& c : rep.checks)
      EXPECT_EQ(c.status, TheoremCheck::Status::Pass)
          << label(s) << ' ' << c.theorem << " n=" << c.n << ' ' << c.detail;
  }
}

TEST(Predicates, CoverRequiredRanges) {
  const auto s = ps1();
  const auto rep = theorem_predicates(s);
  auto has = [&](const std::string& name, Integer n) {
    for (const auto& c : rep.checks)
      if (c.theorem == name && c.n == n) return true;
    return false;
  };
  EXPECT_TRUE(has("h1-nonvanishing", -1));
  EXPECT_TRUE(has("h1-vanishing-p23", -40));
  EXPECT_TRUE(has("h2-vanishing", 6));
  EXPECT_TRUE(has("h2-vanishing", 6 + 9));
  EXPECT_TRUE(has("h0-negative", -40));
  EXPECT_TRUE(has("polarization", 0));
}

TEST(Predicates, H2VanishesFromPP1) {
  for (const auto& s : fixtures::sweep()) {
    const Integer from = s.p() * (s.p() + 1);
    for (Integer n = from; n <= from + 3 * s.ell(); ++n)
      EXPECT_TRUE(h_surface(s, 2, n).is_zero()) << label(s) << " n=" << n;
  }
}

TEST(Predicates, SmallPVanishingProfile) {
  for (const auto& s : fixtures::sweep()) {
    if (s.p() > 3) continue;
    const Integer lo = result1_lower_end(s);
    for (Integer n = -40; n < lo; ++n) EXPECT_TRUE(h_surface(s, 1, n).is_zero()) << label(s);
    for (Integer n = lo; n <= -1; ++n) EXPECT_TRUE(h_surface(s, 1, n).is_nonzero()) << label(s);
  }
}

TEST(Predicates, IndexRangeMatchesEnumeration) {
  for (const auto& s : fixtures::sweep())
    for (Integer n = 0; n <= s.p() * (s.p() + 1) + 3 * s.ell(); ++n)
      EXPECT_EQ(closed_form::negative_indices(s, n), engine_negative_indices(s, n)) << label(s);
}

TEST(Predicates, ClosedFormsForPositiveDegrees) {
  for (const auto& s : fixtures::sweep())
    for (Integer n = 0; n <= s.p() * (s.p() + 1) + 3 * s.ell(); ++n) {
      const auto sc = surface_cohomology(s, n);
      EXPECT_EQ(sc.h[0], closed_form::h0(s, n)) << label(s) << " n=" << n;
      EXPECT_EQ(sc.h[1], closed_form::h1pos(s, n)) << label(s) << " n=" << n;
      EXPECT_EQ(sc.h[2], closed_form::h2(s, n)) << label(s) << " n=" << n;
    }
}
