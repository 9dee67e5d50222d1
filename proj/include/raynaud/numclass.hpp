#pragma once

// Numerical intersection theory on the ruled surface P = P(E) and on the
// cyclic cover X -> P. Classes on P live in the span of the canonical section
// E and a fiber f; classes on X live in the span of E~ = psi^{-1}(E) and
// pullbacks of divisors from the base curve.

#include "raynaud/params.hpp"
#include "raynaud/rational.hpp"

#include <utility>

namespace raynaud {

struct ClassP {
  Rational cE;  // coefficient of E
  Rational cf;  // coefficient of f

  friend bool operator==(const ClassP&, const ClassP&) = default;
  friend ClassP operator+(const ClassP& a, const ClassP& b) { return {a.cE + b.cE, a.cf + b.cf}; }
  friend ClassP operator-(const ClassP& a) { return {-a.cE, -a.cf}; }
  friend ClassP operator*(const Rational& s, const ClassP& a) { return {s * a.cE, s * a.cf}; }

  static ClassP section() { return {1, 0}; }
  static ClassP fiber() { return {0, 1}; }
};

struct ClassX {
  Rational cEt;  // coefficient of E~
  Rational d;    // degree of the base divisor pulled back along phi

  friend bool operator==(const ClassX&, const ClassX&) = default;
  friend ClassX operator+(const ClassX& a, const ClassX& b) { return {a.cEt + b.cEt, a.d + b.d}; }
  friend ClassX operator*(const Rational& s, const ClassX& a) { return {s * a.cEt, s * a.d}; }

  static ClassX section() { return {1, 0}; }
  static ClassX fiber() { return {0, 1}; }
};

/// E.E = deg D, E.f = 1, f.f = 0.
inline Rational intersect_P(const SurfaceParams& params, const ClassP& a, const ClassP& b) {
  return a.cE * b.cE * params.dD() + a.cE * b.cf + a.cf * b.cE;
}

/// E~.E~ = deg D / ell, E~.phi^*(pt) = 1, phi^*.phi^* = 0.
inline Rational intersect_X(const SurfaceParams& params, const ClassX& a, const ClassX& b) {
  return a.cEt * b.cEt * Rational(params.dD(), params.ell()) + a.cEt * b.d + a.d * b.cEt;
}

/// K_P = -2E + pi^*K_C + pi^*D.
inline ClassP canonical_P(const SurfaceParams& params) {
  return {-2, params.canonical_degree() + params.dD()};
}

/// psi^*E = ell E~ and psi^*f is a fiber of phi.
inline ClassX pullback_psi(const SurfaceParams& params, const ClassP& a) {
  return {params.ell() * a.cE, a.cf};
}

inline Rational selfint_Etilde(const SurfaceParams& params) {
  return intersect_X(params, ClassX::section(), ClassX::section());
}

/// p*ell - p - ell, the recurring coefficient in K_X.
inline Integer canonical_twist(const SurfaceParams& params) {
  return params.p() * params.ell() - params.p() - params.ell();
}

/// K_X = phi^*(K_C - ((p ell - p - ell)/ell) D) + (p ell - p - ell - 1) E~.
inline ClassX canonical_X(const SurfaceParams& params) {
  const Integer c = canonical_twist(params);
  ClassX k{c - 1, Rational(params.canonical_degree()) - Rational(c * params.dD(), params.ell())};
  require_denominator_divides(k.cEt, params.ell());
  require_denominator_divides(k.d, params.ell());
  return k;
}

/// Positive square and positive against E and f. Within the span of E and f
/// this is the Nakai-Moishezon test on P(E) for our extension bundles.
inline bool is_ample_P(const SurfaceParams& params, const ClassP& a) {
  return intersect_P(params, a, a) > 0 && intersect_P(params, a, ClassP::section()) > 0 &&
         intersect_P(params, a, ClassP::fiber()) > 0;
}

struct AmpleKXReport {
  Rational deg_A;   // degree of the base part K_C - (p ell - p - ell) D / ell
  Rational coef_B;  // coefficient of E~
  Rational square;
  Rational dot_section;
  Rational dot_fiber;
  bool ample = false;
};

inline AmpleKXReport ample_KX_report(const SurfaceParams& params) {
  const ClassX k = canonical_X(params);
  AmpleKXReport r;
  r.deg_A = k.d;
  r.coef_B = k.cEt;
  r.square = intersect_X(params, k, k);
  r.dot_section = intersect_X(params, k, ClassX::section());
  r.dot_fiber = intersect_X(params, k, ClassX::fiber());
  r.ample = r.deg_A > 0 && r.coef_B > 0 && r.square > 0 && r.dot_section > 0 && r.dot_fiber > 0;
  return r;
}

inline bool is_ample_KX(const SurfaceParams& params) { return ample_KX_report(params).ample; }

/// L_i = K_P + ((p+1)(ell-1+i)/ell) E - (p(ell-1+i)/ell) pi^*D, numerically
/// u_i E + v_i f. H^1(X, K_X^{-1}) vanishes once every L_i is ample.
inline ClassP li_class(const SurfaceParams& params, Integer i) {
  if (i < 0 || i >= params.ell()) throw std::out_of_range("li_class: i outside [0, ell-1]");
  const Integer p = params.p(), ell = params.ell();
  const Rational u = Rational((p + 1) * (ell - 1 + i), ell) - 2;
  const Rational v = Rational(params.canonical_degree()) -
                     Rational(p * ell - p - ell + p * i, ell) * params.dD();
  require_denominator_divides(u, ell);
  require_denominator_divides(v, ell);
  return {u, v};
}

inline bool kodaira_vanishing_KX(const SurfaceParams& params) {
  for (Integer i = 0; i < params.ell(); ++i)
    if (!is_ample_P(params, li_class(params, i))) return false;
  return true;
}

/// Geometric genus of every fiber X_y, via Hurwitz on the degree-ell cover of P^1.
inline Integer fiber_genus(const SurfaceParams& params) {
  return (params.ell() - 1) * (params.p() - 1) / 2;
}

/// Every fiber has a cusp Z^ell = W^p where it meets C~''.
inline std::pair<Integer, Integer> cusp_exponents(const SurfaceParams& params) {
  return {params.ell(), params.p()};
}

/// Numerical class of the polarization Z = O_X(E~) (x) phi^*N_ell.
inline ClassX polarization_class(const SurfaceParams& params, Integer a = 1, Integer b = 1) {
  return {a, b * params.dNl()};
}

}  // namespace raynaud
