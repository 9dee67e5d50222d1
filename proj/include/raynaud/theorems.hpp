#pragma once

// Closed-form cohomology formulas and vanishing/non-vanishing statements for
// (X, Z), written directly from their summation formulas. They share only the
// curve certificate engine with surfcoh.hpp; the decomposition of psi_* and
// the pushforward to C are re-derived here so the two routes check each other.

#include "raynaud/cert.hpp"
#include "raynaud/curvecoh.hpp"
#include "raynaud/numclass.hpp"
#include "raynaud/surfcoh.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace raynaud {
namespace closed_form {

/// H^i(P, O_P(a) (x) pi^*N_ell^t) via pi_*O_P(a) = S^a(E) and
/// R^1 pi_*O_P(a) = S^{-a-2}(E)^dual (x) L^dual.
inline Cert h_on_P(const SurfaceParams& params, int i, Integer a, Integer t) {
  if (a >= 0) {
    if (i == 2) return Cert::zero();
    const TwistedSym s{false, a, t};
    return i == 0 ? h0_cert(params, s) : h1_cert(params, s);
  }
  if (a == -1 || i == 0) return Cert::zero();
  const TwistedSym s{true, -a - 2, t - params.ell()};
  return i == 1 ? h0_cert(params, s) : h1_cert(params, s);
}

inline Cert h0_curve(const SurfaceParams& params, Integer m, Integer t) {
  return h0_cert(params, {false, m, t});
}

inline Cert h1_curve(const SurfaceParams& params, Integer m, Integer t) {
  return h1_cert(params, {false, m, t});
}

/// H^1(X, Z^n) = sum_{i=1}^{ell-1} H^0(C, S^{i(p+1)/ell - 2}(E)^dual (x) N_ell^{ip - ell + n}), n < 0.
inline Cert h1neg(const SurfaceParams& params, Integer n) {
  if (n >= 0) throw std::invalid_argument("h1neg: n must be negative");
  const Integer ell = params.ell(), p = params.p();
  Cert total = Cert::zero();
  for (Integer i = 1; i <= ell - 1; ++i)
    total += h0_cert(params, {true, i * (p + 1) / ell - 2, i * p - ell + n});
  return total;
}

/// H^0(X, Z^n); zero for n < 0 since Z is ample.
inline Cert h0(const SurfaceParams& params, Integer n) {
  if (n < 0) return Cert::zero();
  const Integer ell = params.ell(), p = params.p();
  const Integer k = n / ell, r = n % ell;
  Cert total = Cert::zero();
  if (r == 0) {
    for (Integer i = 0; i <= ell - 1; ++i)
      total += h0_curve(params, -i * (p + 1) / ell + k, i * p + n);
  } else {
    total += h0_curve(params, r + 1 + k - ell, n);
    for (Integer i = 1; i <= ell - 1; ++i)
      total += h0_curve(params, -i * (p + 1) / ell + k + 1, i * p + n);
  }
  return total;
}

/// First M^i index whose H^2 contribution survives, per branch of n >= 0.
inline Integer h2_cutoff(const SurfaceParams& params, Integer n) {
  const Integer ell = params.ell(), p = params.p();
  const Integer r = n % ell;
  if (r == 0) return n / (p + 1) + 1;
  return (n + ell - r) / (p + 1) + 1;
}

/// H^2(X, Z^n), with the summands below the cutoff dropped for n >= 0.
inline Cert h2(const SurfaceParams& params, Integer n) {
  const Integer ell = params.ell(), p = params.p();
  Cert total = Cert::zero();
  if (n < 0) {
    total += h_on_P(params, 2, n, n);
    for (Integer i = 1; i <= ell - 1; ++i)
      total += h_on_P(params, 2, -i * (p + 1) / ell, i * p + n);
    return total;
  }
  const Integer k = n / ell, r = n % ell;
  const Integer from = h2_cutoff(params, n);
  if (r == 0) {
    for (Integer i = from; i <= ell - 1; ++i)
      total += h_on_P(params, 2, -i * (p + 1) / ell + k, i * p + n);
  } else {
    total += h_on_P(params, 2, r + 1 + k - ell, n);
    for (Integer i = from; i <= ell - 1; ++i)
      total += h_on_P(params, 2, -i * (p + 1) / ell + k + 1, i * p + n);
  }
  return total;
}

/// H^1(X, Z^n) for n >= 0: curve-level summands up to the cutoff, P-level after.
inline Cert h1pos(const SurfaceParams& params, Integer n) {
  if (n < 0) throw std::invalid_argument("h1pos: n must be non-negative");
  const Integer ell = params.ell(), p = params.p();
  const Integer k = n / ell, r = n % ell;
  const Integer last_curve = std::min(h2_cutoff(params, n) - 1, ell - 1);
  Cert total = Cert::zero();
  if (r == 0) {
    total += h1_curve(params, k, n);
    for (Integer i = 1; i <= last_curve; ++i)
      total += h1_curve(params, -i * (p + 1) / ell + k, i * p + n);
    for (Integer i = last_curve + 1; i <= ell - 1; ++i)
      total += h_on_P(params, 1, -i * (p + 1) / ell + k, i * p + n);
  } else {
    total += h_on_P(params, 1, r + 1 + k - ell, n);
    for (Integer i = 1; i <= last_curve; ++i)
      total += h1_curve(params, -i * (p + 1) / ell + k + 1, i * p + n);
    for (Integer i = last_curve + 1; i <= ell - 1; ++i)
      total += h_on_P(params, 1, -i * (p + 1) / ell + k + 1, i * p + n);
  }
  return total;
}

/// M^i indices (i >= 1) whose O_P exponent is negative, from the cutoffs alone.
inline std::set<Integer> negative_indices(const SurfaceParams& params, Integer n) {
  std::set<Integer> out;
  const Integer from = n < 0 ? 1 : std::max<Integer>(1, h2_cutoff(params, n));
  for (Integer i = from; i <= params.ell() - 1; ++i) out.insert(i);
  return out;
}

}  // namespace closed_form

/// Indices i >= 1 with negative O_P exponent, read off the engine's decomposition.
inline std::set<Integer> engine_negative_indices(const SurfaceParams& params, Integer n) {
  std::set<Integer> out;
  for (const PTerm& t : decompose(params, n))
    if (t.index >= 1 && t.mtw < 0) out.insert(t.index);
  return out;
}

struct TheoremCheck {
  enum class Status { Pass, EngineWeaker, Contradicted };
  std::string theorem;
  int degree = 0;  // cohomological degree i
  Integer n = 0;
  std::string claim;  // "zero", "nonzero", or "equal"
  Cert engine = Cert::zero();
  Status status = Status::Pass;
  std::string detail;
};

inline std::string to_string(TheoremCheck::Status s) {
  switch (s) {
    case TheoremCheck::Status::Pass: return "pass";
    case TheoremCheck::Status::EngineWeaker: return "theorem stronger than engine";
    case TheoremCheck::Status::Contradicted: return "contradicted";
  }
  return "?";
}

struct TheoremReport {
  SurfaceParams params;
  std::vector<TheoremCheck> checks;

  std::size_t count(TheoremCheck::Status s) const {
    return static_cast<std::size_t>(std::count_if(
        checks.begin(), checks.end(), [s](const TheoremCheck& c) { return c.status == s; }));
  }
  bool contradicted() const { return count(TheoremCheck::Status::Contradicted) > 0; }
};

class TheoremContradicted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TheoremRange {
  Integer nmin = -40;
  Integer nmax_extra = 0;  // added to p(p+1) + 3 ell for the upper end
};

namespace detail {

inline TheoremCheck vanishing_claim(std::string name, int i, Integer n, const Cert& c) {
  TheoremCheck chk{std::move(name), i, n, "zero", c, TheoremCheck::Status::Pass, {}};
  if (c.is_zero())
    chk.status = TheoremCheck::Status::Pass;
  else if (c.is_nonzero())
    chk.status = TheoremCheck::Status::Contradicted;
  else
    chk.status = TheoremCheck::Status::EngineWeaker;
  return chk;
}

inline TheoremCheck nonvanishing_claim(std::string name, int i, Integer n, const Cert& c) {
  TheoremCheck chk{std::move(name), i, n, "nonzero", c, TheoremCheck::Status::Pass, {}};
  if (c.is_nonzero())
    chk.status = TheoremCheck::Status::Pass;
  else if (c.is_zero())
    chk.status = TheoremCheck::Status::Contradicted;
  else
    chk.status = TheoremCheck::Status::EngineWeaker;
  return chk;
}

inline TheoremCheck agreement(std::string name, int i, Integer n, const Cert& engine,
                              const Cert& closed) {
  TheoremCheck chk{std::move(name), i, n, "equal", engine, TheoremCheck::Status::Pass, {}};
  if (!(engine == closed)) {
    chk.status = TheoremCheck::Status::Contradicted;
    chk.detail = "closed form " + closed.to_string() + " vs engine " + engine.to_string();
  }
  return chk;
}

}  // namespace detail

/// Runs every vanishing statement and closed-form identity for (X, Z) over
/// n in [range.nmin, p(p+1) + 3 ell + range.nmax_extra] against the engine.
inline TheoremReport theorem_predicates(const SurfaceParams& params, TheoremRange range = {}) {
  using detail::agreement;
  using detail::nonvanishing_claim;
  using detail::vanishing_claim;
  TheoremReport rep{params, {}};
  auto& out = rep.checks;
  const Integer p = params.p(), ell = params.ell();
  const Integer h2_from = p * (p + 1);
  const Integer nmax = h2_from + 3 * ell + range.nmax_extra;
  const Integer r1_lo = result1_lower_end(params);

  for (Integer n = range.nmin; n <= nmax; ++n) {
    const SurfCert sc = surface_cohomology(params, n);

    // Vanishing of H^2 in high degree, both refined thresholds.
    const bool h2_refined = (n % ell == 0) ? n >= (ell - 1) * (p + 1) : n >= p * (p + 1) - 1;
    if (n >= 0 && (n >= h2_from || h2_refined))
      out.push_back(vanishing_claim("h2-vanishing", 2, n, sc.h[2]));

    if (n < 0) {
      out.push_back(vanishing_claim("h0-negative", 0, n, sc.h[0]));
      if (n >= r1_lo) out.push_back(nonvanishing_claim("h1-nonvanishing", 1, n, sc.h[1]));
      if ((p == 2 || p == 3) && n < r1_lo)
        out.push_back(vanishing_claim("h1-vanishing-p23", 1, n, sc.h[1]));
      out.push_back(agreement("h1neg-closed-form", 1, n, sc.h[1], closed_form::h1neg(params, n)));
    } else {
      const Integer k = n / ell, r = n % ell;
      if (r > 0 && k <= std::min(ell - r - 2, (p + 1) / ell - 2))
        out.push_back(vanishing_claim("h0-refined", 0, n, sc.h[0]));
      out.push_back(agreement("h0-closed-form", 0, n, sc.h[0], closed_form::h0(params, n)));
      out.push_back(agreement("h1pos-closed-form", 1, n, sc.h[1], closed_form::h1pos(params, n)));
    }
    out.push_back(agreement("h2-closed-form", 2, n, sc.h[2], closed_form::h2(params, n)));

    if (closed_form::negative_indices(params, n) != engine_negative_indices(params, n)) {
      TheoremCheck chk{"index-range", 2, n, "equal", sc.h[2], TheoremCheck::Status::Contradicted,
                       "summation cutoff disagrees with the decomposition"};
      out.push_back(chk);
    }
  }

  // Z = O_X(E~) (x) phi^*N_ell is numerically positive, deg N^{e/ell} = deg D / ell.
  {
    const ClassX z = polarization_class(params);
    const bool positive = intersect_X(params, z, z) > 0 &&
                          intersect_X(params, z, ClassX::section()) > 0 &&
                          intersect_X(params, z, ClassX::fiber()) > 0;
    const bool degree_ok = Rational(params.dN() * params.e(), ell) == z.d &&
                           z.d == Rational(params.dD(), ell);
    TheoremCheck chk{"polarization", 0, 0, "positive", Cert::zero(), TheoremCheck::Status::Pass, {}};
    if (!(positive && degree_ok)) {
      chk.status = TheoremCheck::Status::Contradicted;
      chk.detail = "Z fails numerical positivity";
    }
    out.push_back(chk);
  }
  return rep;
}

/// Throws TheoremContradicted listing the first contradiction, if any.
inline void require_theorems(const TheoremReport& rep) {
  for (const auto& c : rep.checks)
    if (c.status == TheoremCheck::Status::Contradicted)
      throw TheoremContradicted(c.theorem + " at i=" + std::to_string(c.degree) +
                                " n=" + std::to_string(c.n) + ": engine " + c.engine.to_string() +
                                (c.detail.empty() ? "" : " (" + c.detail + ")"));
}

}  // namespace raynaud
