#pragma once

// Dimension certificates: what is provably known about a cohomology
// dimension. Exact(k), LowerBound(k >= 1) with no known upper bound, or
// Range(lo, hi) with lo < hi.

#include "raynaud/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace raynaud {

/// Rule combination produced an empty interval. Always an engine bug.
class RuleConflict : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Cert {
 public:
  enum class Kind { Exact, Lower, Range };

  static Cert exact(Integer k) { return Cert(k, k); }
  static Cert zero() { return exact(0); }
  static Cert lower_bound(Integer k) { return Cert(k, std::nullopt); }
  static Cert range(Integer lo, Integer hi) {
    if (lo >= hi) throw std::logic_error("Range requires lo < hi");
    return Cert(lo, hi);
  }
  /// Normalizing constructor from bounds; collapses to Exact when they meet.
  static Cert bounds(Integer lo, std::optional<Integer> hi) { return Cert(lo, hi); }

  Kind kind() const {
    if (!hi_) return Kind::Lower;
    return *hi_ == lo_ ? Kind::Exact : Kind::Range;
  }
  Integer lo() const { return lo_; }
  const std::optional<Integer>& hi() const { return hi_; }

  bool is_exact() const { return kind() == Kind::Exact; }
  bool is_zero() const { return is_exact() && lo_ == 0; }
  /// The dimension is certified positive.
  bool is_nonzero() const { return lo_ >= 1; }
  bool contains(Integer k) const { return k >= lo_ && (!hi_ || k <= *hi_); }
  std::optional<Integer> value() const {
    if (is_exact()) return lo_;
    return std::nullopt;
  }

  /// Dimension of a direct sum: interval addition.
  friend Cert operator+(const Cert& a, const Cert& b) {
    std::optional<Integer> hi;
    if (a.hi_ && b.hi_) hi = *a.hi_ + *b.hi_;
    return Cert(a.lo_ + b.lo_, hi);
  }
  Cert& operator+=(const Cert& o) { return *this = *this + o; }

  /// Meet of two certificates for the same quantity.
  friend Cert meet(const Cert& a, const Cert& b) {
    std::optional<Integer> hi = a.hi_;
    if (b.hi_) hi = hi ? std::min(*hi, *b.hi_) : *b.hi_;
    const Integer lo = std::max(a.lo_, b.lo_);
    if (hi && lo > *hi)
      throw RuleConflict("empty meet: [" + std::to_string(lo) + ", " + std::to_string(*hi) + "]");
    return Cert(lo, hi);
  }

  /// Certificate for (dim - shift), clamped at zero.
  Cert shifted(Integer shift) const {
    std::optional<Integer> hi;
    if (hi_) hi = *hi_ - shift;
    if (hi && *hi < 0) throw RuleConflict("shift drives upper bound negative");
    return Cert(std::max<Integer>(0, lo_ - shift), hi);
  }

  friend bool operator==(const Cert&, const Cert&) = default;

  std::string to_string() const {
    switch (kind()) {
      case Kind::Exact: return "Exact(" + std::to_string(lo_) + ")";
      case Kind::Lower: return "LowerBound(" + std::to_string(lo_) + ")";
      case Kind::Range: break;
    }
    return "Range(" + std::to_string(lo_) + "," + std::to_string(*hi_) + ")";
  }

 private:
  Cert(Integer lo, std::optional<Integer> hi) : lo_(lo), hi_(hi) {
    if (lo_ < 0) throw std::logic_error("negative lower bound");
    if (hi_ && *hi_ < lo_) throw RuleConflict("upper bound below lower bound");
    if (!hi_ && lo_ < 1) throw std::logic_error("LowerBound requires k >= 1");
  }

  Integer lo_;
  std::optional<Integer> hi_;
};

inline std::string to_string(Cert::Kind k) {
  switch (k) {
    case Cert::Kind::Exact: return "exact";
    case Cert::Kind::Lower: return "lower";
    case Cert::Kind::Range: return "range";
  }
  return "?";
}

}  // namespace raynaud
