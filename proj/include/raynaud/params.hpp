#pragma once

// Parameters of a generalized Raynaud surface: a (pre-)Tango curve C of
// genus g in characteristic p with divisor D, the cover degree ell and the
// auxiliary root e of L = O_C(D).

#include "raynaud/rational.hpp"

#include <compare>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace raynaud {

enum class Structure { Tango, PreTango };

inline std::string to_string(Structure s) { return s == Structure::Tango ? "tango" : "pretango"; }

inline std::optional<Structure> parse_structure(const std::string& s) {
  if (s == "tango") return Structure::Tango;
  if (s == "pretango") return Structure::PreTango;
  return std::nullopt;
}

/// Unvalidated candidate tuple, as read from flags or JSON.
struct RawParams {
  Integer p = 0;
  Integer g = 0;
  Integer dD = 0;
  Integer e = 0;
  Integer ell = 0;
  Structure structure = Structure::PreTango;
};

struct Violation {
  enum class Kind { NotPrime, ConstraintViolated };
  Kind kind;
  std::string constraint;  // empty for NotPrime
  std::string detail;

  std::string message() const {
    if (kind == Kind::NotPrime) return "NotPrime(" + detail + ")";
    return "ConstraintViolated(" + constraint + ": " + detail + ")";
  }
};

class InvalidParams : public std::invalid_argument {
 public:
  explicit InvalidParams(std::vector<Violation> v)
      : std::invalid_argument(join(v)), violations_(std::move(v)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<Violation>& v) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : "; ") + x.message();
    return out;
  }
  std::vector<Violation> violations_;
};

inline bool is_prime(Integer n) {
  if (n < 2) return false;
  for (Integer d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class SurfaceParams;
struct Validation;
Validation validate(const RawParams& raw);

/// A validated parameter tuple. Only obtainable through validate() or make(),
/// so every instance satisfies all constraints. deg N and deg N_ell are
/// derived from deg D on demand.
class SurfaceParams {
 public:
  Integer p() const { return raw_.p; }
  Integer g() const { return raw_.g; }
  Integer dD() const { return raw_.dD; }
  Integer e() const { return raw_.e; }
  Integer ell() const { return raw_.ell; }
  Structure structure() const { return raw_.structure; }

  /// deg N, where L = N^e.
  Integer dN() const { return raw_.dD / raw_.e; }
  /// deg N_ell, N_ell = N^(e/ell), so that L = N_ell^ell.
  Integer dNl() const { return raw_.dD / raw_.ell; }
  /// (p+1)/ell, the O_P(-1) exponent of M.
  Integer q() const { return (raw_.p + 1) / raw_.ell; }
  Integer canonical_degree() const { return 2 * raw_.g - 2; }

  const RawParams& raw() const { return raw_; }

  /// Throws InvalidParams carrying every violation.
  static SurfaceParams make(Integer p, Integer g, Integer dD, Integer e, Integer ell,
                            Structure s);

  using Key = std::tuple<Integer, Integer, Integer, Integer, Integer, int>;

  /// Canonical enumeration order (p, ell, e, g, dD, structure).
  Key key() const {
    return {raw_.p, raw_.ell, raw_.e, raw_.g, raw_.dD, static_cast<int>(raw_.structure)};
  }

  friend bool operator==(const SurfaceParams& a, const SurfaceParams& b) {
    return a.key() == b.key();
  }
  friend auto operator<=>(const SurfaceParams& a, const SurfaceParams& b) {
    return a.key() <=> b.key();
  }

 private:
  explicit SurfaceParams(const RawParams& r) : raw_(r) {}
  friend Validation validate(const RawParams& raw);
  RawParams raw_;
};

struct Validation {
  std::optional<SurfaceParams> params;
  std::vector<Violation> violations;
  bool ok() const { return params.has_value(); }
};

inline Validation validate(const RawParams& r) {
  std::vector<Violation> out;
  auto fail = [&](std::string name, std::string detail) {
    out.push_back({Violation::Kind::ConstraintViolated, std::move(name), std::move(detail)});
  };
  auto s = [](Integer v) { return std::to_string(v); };

  if (!is_prime(r.p)) out.push_back({Violation::Kind::NotPrime, "", s(r.p)});
  if (r.g < 2) fail("g >= 2", "g=" + s(r.g));
  if (r.dD < 1) fail("dD >= 1", "dD=" + s(r.dD));
  if (r.e < 2) fail("e >= 2", "e=" + s(r.e));
  if (r.ell < 2) fail("ell >= 2", "ell=" + s(r.ell));

  // Divisibility checks need positive operands; skip those that would be meaningless.
  if (r.e >= 1 && r.p >= 1 && std::gcd(r.e, r.p) != 1)
    fail("gcd(e,p) = 1", "gcd(" + s(r.e) + "," + s(r.p) + ")=" + s(std::gcd(r.e, r.p)));
  if (r.ell >= 1 && r.e >= 1 && r.e % r.ell != 0)
    fail("ell | e", s(r.ell) + " does not divide " + s(r.e));
  if (r.ell >= 1 && r.p >= 1 && (r.p + 1) % r.ell != 0)
    fail("ell | p+1", s(r.ell) + " does not divide " + s(r.p + 1));
  if (r.e >= 1 && r.dD >= 1 && r.dD % r.e != 0)
    fail("e | dD", s(r.e) + " does not divide " + s(r.dD));
  if (r.ell >= 1 && r.dD >= 1 && r.dD % r.ell != 0)
    fail("ell | dD", s(r.ell) + " does not divide " + s(r.dD));

  const Integer pd = r.p * r.dD;
  const Integer k = 2 * r.g - 2;
  if (pd > k) fail("p*dD <= 2g-2", s(pd) + " > " + s(k));
  if (r.structure == Structure::Tango && pd != k)
    fail("tango => p*dD = 2g-2", s(pd) + " != " + s(k));
  // (df) >= pD with deg (df) = pD forces (df) = pD, i.e. the curve is Tango.
  if (r.structure == Structure::PreTango && pd == k)
    fail("pretango => p*dD < 2g-2", s(pd) + " = " + s(k) + " makes the structure Tango");

  if (!out.empty()) return {std::nullopt, std::move(out)};
  return {SurfaceParams(r), {}};
}

inline SurfaceParams SurfaceParams::make(Integer p, Integer g, Integer dD, Integer e, Integer ell,
                                         Structure s) {
  auto v = validate({p, g, dD, e, ell, s});
  if (!v.ok()) throw InvalidParams(std::move(v.violations));
  return *v.params;
}

struct FamilyBounds {
  Integer pmax = 0;
  Integer gmax = 0;
  Integer ddmax = 0;
};

/// Every valid tuple within the bounds, in canonical (p, ell, e, g, dD, structure) order.
inline std::vector<SurfaceParams> enumerate_families(const FamilyBounds& b) {
  std::vector<SurfaceParams> out;
  for (Integer p = 2; p <= b.pmax; ++p) {
    if (!is_prime(p)) continue;
    for (Integer ell = 2; ell <= p + 1; ++ell) {
      if ((p + 1) % ell != 0) continue;
      for (Integer e = ell; e <= b.ddmax; e += ell) {
        if (std::gcd(e, p) != 1) continue;
        for (Integer g = 2; g <= b.gmax; ++g) {
          for (Integer dD = e; dD <= b.ddmax; dD += e) {
            for (Structure s : {Structure::Tango, Structure::PreTango}) {
              auto v = validate({p, g, dD, e, ell, s});
              if (v.ok()) out.push_back(*v.params);
            }
          }
        }
      }
    }
  }
  return out;
}

/// The surface is smooth exactly when the curve is Tango.
inline bool is_smooth(const SurfaceParams& params) { return params.structure() == Structure::Tango; }

/// Always true: the cover is the normal Spec of the Esnault-Viehweg algebra.
inline bool is_normal(const SurfaceParams&) { return true; }

/// Normal surfaces satisfy S_2, hence are Cohen-Macaulay.
inline bool is_cohen_macaulay(const SurfaceParams& params) { return is_normal(params); }

}  // namespace raynaud
