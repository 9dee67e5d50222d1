#pragma once

// Graded local cohomology of the section ring R = sum_{n>=0} H^0(X, Z^n)
// at its irrelevant ideal. R is the 3-dimensional cone over the surface, so
// [H^{i+1}_m(R)]_n = H^i(X, Z^n) for i >= 1, and H^0_m, H^1_m vanish.

#include "raynaud/cert.hpp"
#include "raynaud/surfcoh.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace raynaud {

inline constexpr int kSectionRingDim = 3;

inline Cert local_cohomology(const SurfaceParams& params, int j, Integer n) {
  switch (j) {
    case 0:
    case 1: return Cert::zero();
    case 2: return h_surface(params, 1, n);
    case 3: return h_surface(params, 2, n);
    default: throw std::out_of_range("local cohomology index outside 0..3");
  }
}

struct LocalCohReport {
  int dimR = kSectionRingDim;
  std::map<std::pair<int, Integer>, Cert> pieces;  // (j, n) -> certificate
};

inline LocalCohReport local_cohomology_report(const SurfaceParams& params, const std::vector<int>& js,
                                              Integer nmin, Integer nmax) {
  LocalCohReport rep;
  for (Integer n = nmin; n <= nmax; ++n) {
    const SurfCert sc = surface_cohomology(params, n);
    for (int j : js) {
      if (j < 0 || j > 3) throw std::out_of_range("local cohomology index outside 0..3");
      rep.pieces.emplace(std::pair{j, n}, j <= 1 ? Cert::zero() : sc.h[j - 1]);
    }
  }
  return rep;
}

/// Negative degrees n in [nmin, -1] where [H^2_m(R)]_n is not certified zero.
inline std::vector<Integer> negative_h2m_support(const SurfaceParams& params, Integer nmin) {
  std::vector<Integer> out;
  for (Integer n = nmin; n < 0; ++n)
    if (!local_cohomology(params, 2, n).is_zero()) out.push_back(n);
  return out;
}

}  // namespace raynaud
