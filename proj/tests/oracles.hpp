#pragma once

// Independent reference computations for the test suite. Nothing here calls
// into the library's formulas; only SurfaceParams accessors are used.

#include "raynaud/params.hpp"
#include "raynaud/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using raynaud::Integer;
using raynaud::Rational;
using raynaud::SurfaceParams;

inline bool prime(Integer n) {
  if (n < 2) return false;
  for (Integer d = 2; d < n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline Integer gcd(Integer a, Integer b) {
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

/// Brute-force membership test, written straight from the constraint list.
inline bool admissible(Integer p, Integer g, Integer dD, Integer e, Integer ell, bool tango) {
  if (!prime(p) || g < 2 || dD < 1 || e < 2 || ell < 2) return false;
  if (gcd(e, p) != 1 || e % ell != 0 || (p + 1) % ell != 0) return false;
  if (dD % e != 0 || dD % ell != 0) return false;
  if (tango) return p * dD == 2 * g - 2;
  return p * dD < 2 * g - 2;
}

/// 2x2 Gram matrix pairing on the span of (section, fiber).
inline Rational pair(const Rational (&gram)[2][2], Rational a0, Rational a1, Rational b0,
                     Rational b1) {
  return a0 * gram[0][0] * b0 + a0 * gram[0][1] * b1 + a1 * gram[1][0] * b0 + a1 * gram[1][1] * b1;
}

/// Degree of S^m(E)^(v) (x) N_ell^t, summed over the filtration quotients.
inline Integer curve_degree(const SurfaceParams& s, bool dual, Integer m, Integer t) {
  Integer deg = 0;
  for (Integer j = 0; j <= m; ++j) deg += ((dual ? -j : j) * s.ell() + t) * s.dNl();
  return deg;
}

inline Integer curve_chi(const SurfaceParams& s, bool dual, Integer m, Integer t) {
  if (m < 0) return 0;
  return curve_degree(s, dual, m, t) + (m + 1) * (1 - s.g());
}

/// chi(P, O_P(a) (x) pi^*N_ell^t) by Riemann-Roch on the ruled surface:
/// chi(O_P) + (D^2 - D.K_P)/2 with D = aE + x f, x = t deg N_ell.
inline Integer chi_P(const SurfaceParams& s, Integer a, Integer t) {
  const Integer x = t * s.dNl();
  const Integer dd = a * a * s.dD() + 2 * a * x;
  const Integer kE = -2, kf = 2 * s.g() - 2 + s.dD();
  const Integer dk = a * kE * s.dD() + a * kf + x * kE;
  return (1 - s.g()) + (dd - dk) / 2;
}

inline Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

struct Summand {
  Integer mtw;
  Integer t;
};

/// psi_*O_X(N E~) = sum_j M^j(floor((N+j)/ell) E), twisted by N_ell^T.
inline std::vector<Summand> eigen_summands(const SurfaceParams& s, Integer N, Integer T) {
  std::vector<Summand> out;
  const Integer q = (s.p() + 1) / s.ell();
  for (Integer j = 0; j < s.ell(); ++j) out.push_back({floor_div(N + j, s.ell()) - j * q, j * s.p() + T});
  return out;
}

inline Integer chi_X(const SurfaceParams& s, Integer n, Integer a = 1, Integer b = 1) {
  Integer total = 0;
  for (const auto& m : eigen_summands(s, n * a, n * b)) total += chi_P(s, m.mtw, m.t);
  return total;
}

/// Third forward differences of f on [from, to] all vanish.
template <class F>
bool quadratic_on(F f, Integer from, Integer to) {
  std::vector<Integer> v;
  for (Integer n = from; n <= to; ++n) v.push_back(f(n));
  for (std::size_t i = 0; i + 3 < v.size(); ++i)
    if (v[i + 3] - 3 * v[i + 2] + 3 * v[i + 1] - v[i] != 0) return false;
  return true;
}

/// Fixed-seed source of small rationals with denominators dividing `den`.
class RationalGen {
 public:
  explicit RationalGen(std::uint32_t seed) : rng_(seed) {}
  Rational operator()(Integer den = 12) {
    std::uniform_int_distribution<Integer> num(-60, 60);
    std::uniform_int_distribution<Integer> d(1, den);
    return Rational(num(rng_), d(rng_));
  }
  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace oracle
