#pragma once

// Cohomology certificates on the base curve C for the sheaves
// S^m(E) (x) N_ell^t and S^m(E)^dual (x) N_ell^t, from degree data alone.
//
// S^m(E) has a filtration with line-bundle quotients L^j, j = 0..m, and
// L = N_ell^ell, so every quotient is a power of N_ell. The sub line bundle
// of S^m(E) is O_C; that of S^m(E)^dual is L^{-m}.

#include "raynaud/cert.hpp"
#include "raynaud/params.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace raynaud {

struct TwistedSym {
  bool dualized = false;
  Integer m = 0;  // symmetric power; m < 0 is the zero sheaf
  Integer t = 0;  // exponent of N_ell

  bool is_zero() const { return m < 0; }
  Integer rank() const { return is_zero() ? 0 : m + 1; }
  friend bool operator==(const TwistedSym&, const TwistedSym&) = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    return "S^" + std::to_string(m) + "(E)" + (dualized ? "^v" : "") + "(x)N^" + std::to_string(t);
  }
};

inline Integer degree(const SurfaceParams& params, const TwistedSym& s) {
  if (s.is_zero()) return 0;
  const Integer sym = s.m * (s.m + 1) / 2 * params.dD();
  return (s.dualized ? -sym : sym) + (s.m + 1) * s.t * params.dNl();
}

/// N_ell-exponents of the filtration quotients, j = 0..m.
inline std::vector<Integer> quotient_exponents(const SurfaceParams& params, const TwistedSym& s) {
  std::vector<Integer> out;
  for (Integer j = 0; j <= s.m; ++j) out.push_back((s.dualized ? -j : j) * params.ell() + s.t);
  return out;
}

/// Riemann-Roch: deg + rank (1 - g). Zero for the zero sheaf.
inline Integer chi(const SurfaceParams& params, const TwistedSym& s) {
  if (s.is_zero()) return 0;
  return degree(params, s) + s.rank() * (1 - params.g());
}

namespace detail {

struct Bounds {
  Integer lo;
  Integer hi;
};

/// h^0 of the line bundle N_ell^t. deg = t deg N_ell, and deg 0 forces t = 0,
/// where N_ell^0 = O_C is trivial. D > 0 is effective, so N_ell^{k ell} = L^k
/// has a section for k >= 0.
inline Bounds line_bundle_h0(const SurfaceParams& params, Integer t) {
  const Integer deg = t * params.dNl();
  const Integer x = deg + 1 - params.g();
  if (deg < 0) return {0, 0};
  if (deg == 0) return {1, 1};
  if (deg > params.canonical_degree()) return {x, x};
  const Integer effective = t % params.ell() == 0 ? 1 : 0;
  return {std::max<Integer>(effective, x), deg + 1};
}

}  // namespace detail

/// Which rules fired; kept for reporting.
struct RuleTrace {
  bool zero_sheaf = false;      // R0
  bool line_bundle = false;     // R1
  bool dual_vanishing = false;  // R2
  bool unit_section = false;    // R3, with a positive lower bound
  bool all_negative = false;    // R4
  bool all_nonspecial = false;  // every quotient degree > 2g-2
};

struct CurveCert {
  Cert h0 = Cert::zero();
  Cert h1 = Cert::zero();
  Integer chi = 0;
  RuleTrace rules;
};

/// h^0 and h^1 certificates with chi. Lower bounds combine by max, upper bounds
/// by min; an empty result throws RuleConflict.
inline CurveCert curve_cohomology(const SurfaceParams& params, const TwistedSym& s) {
  CurveCert out;
  if (s.is_zero()) {
    out.rules.zero_sheaf = true;
    return out;
  }
  out.chi = chi(params, s);

  Integer lo = std::max<Integer>(0, out.chi);  // R6
  std::optional<Integer> hi;
  auto cap = [&](Integer v) { hi = hi ? std::min(*hi, v) : v; };
  auto floor_at = [&](Integer v) { lo = std::max(lo, v); };

  const auto exps = quotient_exponents(params, s);
  const Integer k = params.canonical_degree();
  out.rules.all_negative =
      std::all_of(exps.begin(), exps.end(), [&](Integer t) { return t * params.dNl() < 0; });
  out.rules.all_nonspecial =
      std::all_of(exps.begin(), exps.end(), [&](Integer t) { return t * params.dNl() > k; });

  if (s.m == 0) {
    out.rules.line_bundle = true;
    const auto b = detail::line_bundle_h0(params, s.t);
    floor_at(b.lo);
    cap(b.hi);
  } else {
    if (s.dualized && s.t < params.ell()) {
      out.rules.dual_vanishing = true;
      cap(0);
    }
    // Unit section: O_C in S^m(E), or L^{-m} in S^m(E)^dual.
    const Integer sub = s.dualized ? s.t - s.m * params.ell() : s.t;
    const Integer sub_lo = detail::line_bundle_h0(params, sub).lo;
    if (sub_lo >= 1) out.rules.unit_section = true;
    floor_at(sub_lo);

    if (out.rules.all_negative) cap(0);
    Integer sum = 0;
    for (Integer t : exps) sum += detail::line_bundle_h0(params, t).hi;
    cap(sum);
  }

  if (hi && lo > *hi)
    throw RuleConflict("h0 rules disagree for " + s.to_string() + ": lo=" + std::to_string(lo) +
                       " hi=" + std::to_string(*hi));
  out.h0 = Cert::bounds(lo, hi);

  if (out.rules.all_nonspecial) {
    if (!out.h0.contains(out.chi))
      throw RuleConflict("nonspecial sheaf " + s.to_string() + " with h0 cert excluding chi");
    out.h0 = Cert::exact(out.chi);
    out.h1 = Cert::zero();
  } else {
    out.h1 = out.h0.shifted(out.chi);
  }
  return out;
}

inline Cert h0_cert(const SurfaceParams& params, const TwistedSym& s) {
  return curve_cohomology(params, s).h0;
}

inline Cert h1_cert(const SurfaceParams& params, const TwistedSym& s) {
  return curve_cohomology(params, s).h1;
}

}  // namespace raynaud
