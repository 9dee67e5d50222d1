#pragma once

#include "raynaud/cert.hpp"
#include "raynaud/curvecoh.hpp"
#include "raynaud/numclass.hpp"
#include "raynaud/params.hpp"
#include "raynaud/rational.hpp"
#include "raynaud/sectionring.hpp"
#include "raynaud/surfcoh.hpp"
#include "raynaud/theorems.hpp"
