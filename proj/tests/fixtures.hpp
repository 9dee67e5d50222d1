#pragma once

#include "raynaud/params.hpp"

#include <vector>

namespace fixtures {

using raynaud::Structure;
using raynaud::SurfaceParams;

inline SurfaceParams ps1() { return SurfaceParams::make(2, 4, 3, 3, 3, Structure::Tango); }
inline SurfaceParams ps2() { return SurfaceParams::make(3, 4, 2, 2, 2, Structure::Tango); }
inline SurfaceParams ps3() { return SurfaceParams::make(3, 7, 4, 4, 4, Structure::Tango); }
inline SurfaceParams ps4() { return SurfaceParams::make(5, 9, 3, 3, 3, Structure::PreTango); }

inline std::vector<SurfaceParams> named() { return {ps1(), ps2(), ps3(), ps4()}; }

/// p <= 7, g <= 20, deg D <= 20.
inline const std::vector<SurfaceParams>& sweep() {
  static const std::vector<SurfaceParams> all = raynaud::enumerate_families({7, 20, 20});
  return all;
}

}  // namespace fixtures
