#pragma once

// Cohomology of Z_{a,b}^n = O_X(n a E~) (x) phi^*N_ell^{n b} on the cyclic
// cover X, computed term by term. psi is affine, so H^i(X, F) = H^i(P, psi_*F),
// and psi_* splits into line bundles O_P(m) (x) pi^*N_ell^t. Each of those is
// pushed down to C:
//
//   m >= 0   H^i(P, .) = H^i(C, S^m(E) (x) N_ell^t)
//   m = -1   all cohomology vanishes
//   m <= -2  H^i(P, .) = H^{i-1}(C, S^{-m-2}(E)^dual (x) N_ell^{t-ell})

#include "raynaud/cert.hpp"
#include "raynaud/curvecoh.hpp"
#include "raynaud/params.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace raynaud {

/// O_P(mtw) (x) pi^*N_ell^t. `index` is i for the summand coming from M^i;
/// the leading summand of each branch has index 0.
struct PTerm {
  Integer mtw = 0;
  Integer t = 0;
  Integer index = 0;
  friend bool operator==(const PTerm&, const PTerm&) = default;
};

/// Z_{a,b} = O_X(a E~) (x) phi^*N_ell^b; the default is Z itself.
struct Polarization {
  Integer a = 1;
  Integer b = 1;
};

/// How psi_*O_X(N E~) is split into line bundles on P.
///
/// Lemma: for N = k ell >= 0 the summands M^i(kE); for N = k ell + r > 0 the
/// summand O_P(r+1+k-ell) and M^i((k+1)E), i >= 1; for N < 0 the summand
/// O_P(N) and M^i, i >= 1. This is the default model.
///
/// Eigen: M^j(floor((N+j)/ell) E) for j = 0..ell-1, read off from the order of
/// vanishing of the eigenfunctions z^j along E~. Agrees with Lemma exactly
/// when N >= 0 and N mod ell is 0 or ell-1, or N = -1.
enum class Splitting { Lemma, Eigen };

inline std::string to_string(Splitting s) { return s == Splitting::Lemma ? "lemma" : "eigen"; }

inline Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor_mod(Integer a, Integer b) { return a - floor_div(a, b) * b; }

/// Summands of psi_*(Z_{a,b}^n), twists included.
inline std::vector<PTerm> decompose(const SurfaceParams& params, Integer n, Polarization pol = {},
                                    Splitting split = Splitting::Lemma) {
  const Integer ell = params.ell(), p = params.p(), q = params.q();
  const Integer mult = n * pol.a;  // coefficient of E~
  const Integer twist = n * pol.b;
  std::vector<PTerm> out;
  out.reserve(static_cast<std::size_t>(ell));
  if (split == Splitting::Eigen) {
    for (Integer j = 0; j < ell; ++j)
      out.push_back({-j * q + floor_div(mult + j, ell), j * p + twist, j});
  } else if (mult >= 0) {
    const Integer k = floor_div(mult, ell);
    const Integer r = floor_mod(mult, ell);
    if (r == 0) {
      for (Integer i = 0; i < ell; ++i) out.push_back({k - i * q, i * p + twist, i});
    } else {
      out.push_back({r + 1 + k - ell, twist, 0});
      for (Integer i = 1; i < ell; ++i) out.push_back({k + 1 - i * q, i * p + twist, i});
    }
  } else {
    out.push_back({mult, twist, 0});
    for (Integer i = 1; i < ell; ++i) out.push_back({-i * q, i * p + twist, i});
  }
  return out;
}

struct Reduction {
  TwistedSym sheaf;
  bool via_r1 = false;  // true when the sheaf is R^1 pi_* of the term
};

/// The curve sheaf carrying the cohomology of a term, or nullopt when every
/// H^i(P, term) vanishes (mtw = -1).
inline std::optional<Reduction> reduce_term(const SurfaceParams& params, const PTerm& term) {
  if (term.mtw >= 0) return Reduction{{false, term.mtw, term.t}, false};
  if (term.mtw == -1) return std::nullopt;
  return Reduction{{true, -term.mtw - 2, term.t - params.ell()}, true};
}

/// Curve sheaf whose H^{degree} equals H^i(P, term), or nullopt for a zero
/// contribution.
struct CurveSlot {
  TwistedSym sheaf;
  int degree = 0;
};

inline std::optional<CurveSlot> reduce_term(const SurfaceParams& params, const PTerm& term, int i) {
  if (i < 0 || i > 2) throw std::out_of_range("cohomological degree outside 0..2");
  const auto red = reduce_term(params, term);
  if (!red) return std::nullopt;
  const int d = red->via_r1 ? i - 1 : i;
  if (d < 0 || d > 1) return std::nullopt;
  return CurveSlot{red->sheaf, d};
}

struct TermRecord {
  PTerm term;
  std::optional<Reduction> reduction;
  CurveCert curve;  // certificates of the reduced sheaf, if any
  std::array<Cert, 3> h{Cert::zero(), Cert::zero(), Cert::zero()};
  Integer chi = 0;  // chi(P, term) = chi(pi_*) - chi(R^1 pi_*)
};

struct SurfCert {
  Integer n = 0;
  Polarization pol;
  Splitting split = Splitting::Lemma;
  std::array<Cert, 3> h{Cert::zero(), Cert::zero(), Cert::zero()};
  Integer chi = 0;
  std::vector<TermRecord> terms;

  bool all_exact() const { return h[0].is_exact() && h[1].is_exact() && h[2].is_exact(); }
};

inline TermRecord evaluate_term(const SurfaceParams& params, const PTerm& term) {
  TermRecord rec;
  rec.term = term;
  rec.reduction = reduce_term(params, term);
  if (!rec.reduction) return rec;
  rec.curve = curve_cohomology(params, rec.reduction->sheaf);
  if (rec.reduction->via_r1) {
    rec.h = {Cert::zero(), rec.curve.h0, rec.curve.h1};
    rec.chi = -rec.curve.chi;
  } else {
    rec.h = {rec.curve.h0, rec.curve.h1, Cert::zero()};
    rec.chi = rec.curve.chi;
  }
  return rec;
}

/// Certificates for h^0, h^1, h^2 of Z_{a,b}^n with the exact Euler characteristic.
inline SurfCert surface_cohomology(const SurfaceParams& params, Integer n, Polarization pol = {},
                                   Splitting split = Splitting::Lemma) {
  SurfCert out;
  out.n = n;
  out.pol = pol;
  out.split = split;
  for (const PTerm& term : decompose(params, n, pol, split)) {
    TermRecord rec = evaluate_term(params, term);
    for (int i = 0; i < 3; ++i) out.h[i] += rec.h[i];
    out.chi += rec.chi;
    out.terms.push_back(std::move(rec));
  }
  return out;
}

inline Cert h_surface(const SurfaceParams& params, int i, Integer n, Polarization pol = {},
                      Splitting split = Splitting::Lemma) {
  if (i < 0 || i > 2) throw std::out_of_range("cohomological degree outside 0..2");
  return surface_cohomology(params, n, pol, split).h[i];
}

inline Integer chi_X(const SurfaceParams& params, Integer n, Polarization pol = {},
                     Splitting split = Splitting::Lemma) {
  Integer total = 0;
  for (const PTerm& term : decompose(params, n, pol, split)) {
    const auto red = reduce_term(params, term);
    if (!red) continue;
    total += red->via_r1 ? -chi(params, red->sheaf) : chi(params, red->sheaf);
  }
  return total;
}

/// Lower end of the negative-degree non-vanishing window: -(ell - ceil(2 ell/(p+1))).
inline Integer result1_lower_end(const SurfaceParams& params) {
  const Integer ceil = (2 * params.ell() + params.p()) / (params.p() + 1);
  return -(params.ell() - ceil);
}

struct ZabCert {
  Cert cert = Cert::zero();
  Integer summand_index = 0;  // i = ell - b
  TwistedSym summand;         // the sheaf containing O_C when the inclusion applies
  bool inclusion_fired = false;
};

/// h^1(X, Z_{a,b}^{-1}) through the summand i = ell - b of R^1 phi_*, which
/// contains O_C whenever S^{i(p+1)/ell - 2}(E) is nonzero. The inclusion only
/// yields a lower bound. When the summand is the zero sheaf, the term-wise
/// engine certificate is returned instead.
inline ZabCert zab_nonvanishing(const SurfaceParams& params, Integer a, Integer b) {
  if (a < 1) throw std::invalid_argument("zab_nonvanishing: a must be >= 1");
  if (b < 1 || b >= params.ell()) throw std::invalid_argument("zab_nonvanishing: b outside [1, ell-1]");
  ZabCert out;
  out.summand_index = params.ell() - b;
  const Integer i = out.summand_index;
  out.summand = {true, i * params.q() - 2, i * params.p() - params.ell() - b};
  const Cert part = h0_cert(params, out.summand);
  if (part.is_nonzero()) {
    out.inclusion_fired = true;
    out.cert = Cert::lower_bound(part.lo());
  } else {
    out.cert = h_surface(params, 1, -1, {a, b});
  }
  return out;
}

}  // namespace raynaud
