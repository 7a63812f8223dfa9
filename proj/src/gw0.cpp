#include "ellgw/gw0.hpp"

#include "ellgw/local_gw.hpp"

namespace ellgw {

SurfaceSeries gw0_series(const SurfaceSpec& spec, const Rat& bound) {
    SurfaceSeries s(spec, bound);
    if (spec.c_pi != 0) {
        long dmax = to_long(floor_rat(bound));
        for (long d = 1; d <= dmax; ++d)
            s.add_term(t_power(spec, d), Rat(spec.c_pi) * local_gw_regular(Int(d)));
    }
    for (std::size_t k = 0; k < spec.fibers.size(); ++k) {
        long m = spec.fibers[k].m;
        long dmax = to_long(floor_rat(bound * Rat(m)));
        for (long d = 1; d <= dmax; ++d)
            s.add_term(fiber_power(spec, k, d), local_gw_multiple_closed(Int(m), Int(d)));
    }
    return s;
}

}  // namespace ellgw
