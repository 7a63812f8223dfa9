#pragma once

#include <string>
#include <vector>

#include "ellgw/exactnum.hpp"
#include "ellgw/series.hpp"
#include "ellgw/surface.hpp"
#include "ellgw/surface_spec.hpp"

namespace ellgw {

// The universal function F(t) defined by prod_d F(t^d)^{-sigma(d)/d} = 1-t,
// held as the coefficients a_n of log F together with F itself.
// logF[n] = a_n for 1 <= n <= trunc, logF[0] = 0.
struct FCoefficients {
    long trunc = 0;
    std::vector<Rat> logF;
    UniSeries F;
};

// Solves the triangular system sum_{d|n} (sigma(d)/d) * a_{n/d} = 1/n,
// which is the defining identity after taking logarithms. Rejects trunc < 1.
FCoefficients solve_F(long trunc);

// Recomputes prod_{d<=bound} F(t^d)^{-sigma(d)/d} from the solved
// coefficients and compares with 1-t mod t^{bound+1}. Requires
// fc.trunc >= bound.
bool f_defining_identity_holds(const FCoefficients& fc, long bound);

// Smallest F truncation that makes every factor of the degree-bound
// product representable: floor(bound * m_k) over the declared fibers and
// floor(bound) for the regular part, at least 1.
long required_trunc(const SurfaceSpec& spec, const Rat& bound);

// The two sides of the Gr = SW identity. The gw side is the product
// prod_{d} F(t^d)^{c_pi * GW(F,d)} * prod_{d,k} F(t_{m_k}^d)^{GW(F_{m_k},d)}
// cut at the factors whose non-constant terms all exceed the bound; the
// closed side is (1-t)^{c_pi} * prod_k (1 + t_{m_k} + ... + t_{m_k}^{m_k-1}).
// On a correct build they agree monomial-by-monomial at every bound.
SurfaceSeries gr_series_gw_side(const SurfaceSpec& spec, const Rat& bound, long trunc);
SurfaceSeries gr_series_closed_side(const SurfaceSpec& spec, const Rat& bound);

// Univariate shadow of the multiple-fiber factor: checks
// prod_d F(u^d)^{GW(F_m,d)} = 1 + u + ... + u^{m-1} mod u^{bound+1}.
bool per_fiber_product_check(long m, long bound, long trunc);

// F-coefficient cache. Format: header "Fcoeffs v1 trunc=N", then one line
// "n a_n" per 1 <= n <= N with a_n as "p" or "p/q". Writes go to a
// temporary file first and are renamed into place.
void write_f_cache(const FCoefficients& fc, const std::string& path);
FCoefficients read_f_cache(const std::string& path);

}  // namespace ellgw
