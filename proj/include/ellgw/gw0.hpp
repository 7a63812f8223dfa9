#pragma once

#include "ellgw/surface.hpp"
#include "ellgw/surface_spec.hpp"

namespace ellgw {

// Dimension-zero genus-one generating function of the surface:
//   c_pi * sum_{d>0} GW(F,d) t^d + sum_k sum_{d>0} GW(F_{m_k},d) t_{m_k}^d
// truncated at total degree <= bound. Powers t_{m_k}^d with m_k | d carry
// into t^{d/m_k}, so coefficients of equal normal forms are added.
SurfaceSeries gw0_series(const SurfaceSpec& spec, const Rat& bound);

}  // namespace ellgw
