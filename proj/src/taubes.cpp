#include "ellgw/taubes.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ellgw/local_gw.hpp"

namespace ellgw {

FCoefficients solve_F(long trunc) {
    if (trunc < 1) throw std::invalid_argument("solve_F: trunc must be >= 1");
    FCoefficients fc;
    fc.trunc = trunc;
    fc.logF.assign(static_cast<std::size_t>(trunc) + 1, Rat(0));
    // sigma(1)/1 = 1 multiplies a_n, so each equation yields a_n directly
    // from earlier coefficients.
    for (long n = 1; n <= trunc; ++n) {
        Rat s = rat(1, n);
        for (const Int& dd : divisors(Int(n))) {
            if (dd == 1) continue;
            long d = to_long(dd);
            s -= rat(sigma(dd), Int(d)) * fc.logF[n / d];
        }
        fc.logF[n] = s;
    }
    UniSeries lf(trunc);
    for (long n = 1; n <= trunc; ++n) lf.set_coeff(n, fc.logF[n]);
    fc.F = exp(lf);
    return fc;
}

bool f_defining_identity_holds(const FCoefficients& fc, long bound) {
    if (bound < 1) throw std::invalid_argument("f_defining_identity_holds: bound must be >= 1");
    if (fc.trunc < bound)
        throw std::invalid_argument("f_defining_identity_holds: trunc " +
                                    std::to_string(fc.trunc) + " < bound " +
                                    std::to_string(bound));
    UniSeries prod = UniSeries::one(bound);
    for (long d = 1; d <= bound; ++d) {
        Rat r = rat(-sigma(Int(d)), Int(d));
        prod = prod * pow(fc.F.truncated(bound / d), r).stretched(d, bound);
    }
    UniSeries target = UniSeries::one(bound);
    target.set_coeff(1, Rat(-1));
    return prod == target;
}

long required_trunc(const SurfaceSpec& spec, const Rat& bound) {
    long t = 1;
    if (spec.c_pi != 0) t = std::max(t, to_long(floor_rat(bound)));
    for (const Fiber& f : spec.fibers) t = std::max(t, to_long(floor_rat(bound * Rat(f.m))));
    return t;
}

SurfaceSeries gr_series_gw_side(const SurfaceSpec& spec, const Rat& bound, long trunc) {
    long needed = required_trunc(spec, bound);
    if (trunc < needed)
        throw std::invalid_argument("gr_series_gw_side: trunc " + std::to_string(trunc) +
                                    " < required " + std::to_string(needed) + " for bound " +
                                    to_string(bound));
    FCoefficients fc = solve_F(trunc);
    SurfaceSeries prod = SurfaceSeries::one(spec, bound);
    if (spec.c_pi != 0) {
        long dmax = to_long(floor_rat(bound));
        for (long d = 1; d <= dmax; ++d) {
            Rat r = Rat(spec.c_pi) * local_gw_regular(Int(d));
            long sub = to_long(floor_rat(bound / Rat(d)));
            prod = prod * subst_monomial(pow(fc.F.truncated(sub), r), t_power(spec, d), spec, bound);
        }
    }
    for (std::size_t k = 0; k < spec.fibers.size(); ++k) {
        long m = spec.fibers[k].m;
        long dmax = to_long(floor_rat(bound * Rat(m)));
        for (long d = 1; d <= dmax; ++d) {
            Rat r = local_gw_multiple_closed(Int(m), Int(d));
            if (r == 0) continue;
            long sub = to_long(floor_rat(bound * Rat(m) / Rat(d)));
            prod = prod *
                   subst_monomial(pow(fc.F.truncated(sub), r), fiber_power(spec, k, d), spec, bound);
        }
    }
    return prod;
}

SurfaceSeries gr_series_closed_side(const SurfaceSpec& spec, const Rat& bound) {
    SurfaceSeries prod = SurfaceSeries::one(spec, bound);
    if (spec.c_pi != 0) {
        long tmax = to_long(floor_rat(bound));
        UniSeries lin = UniSeries::one(tmax);
        if (tmax >= 1) lin.set_coeff(1, Rat(-1));
        prod = prod * subst_monomial(pow(lin, Rat(spec.c_pi)), t_power(spec, 1), spec, bound);
    }
    for (std::size_t k = 0; k < spec.fibers.size(); ++k) {
        SurfaceSeries factor(spec, bound);
        for (long j = 0; j < spec.fibers[k].m; ++j) factor.add_term(fiber_power(spec, k, j), Rat(1));
        prod = prod * factor;
    }
    return prod;
}

bool per_fiber_product_check(long m, long bound, long trunc) {
    if (m < 2) throw std::invalid_argument("per_fiber_product_check: m must be >= 2");
    if (bound < 0) throw std::invalid_argument("per_fiber_product_check: bound must be >= 0");
    if (trunc < std::max(bound, 1L))
        throw std::invalid_argument("per_fiber_product_check: trunc " + std::to_string(trunc) +
                                    " < bound " + std::to_string(bound));
    FCoefficients fc = solve_F(trunc);
    UniSeries prod = UniSeries::one(bound);
    for (long d = 1; d <= bound; ++d) {
        Rat r = local_gw_multiple_closed(Int(m), Int(d));
        if (r == 0) continue;
        prod = prod * pow(fc.F.truncated(bound / d), r).stretched(d, bound);
    }
    UniSeries target(bound);
    for (long j = 0; j <= std::min(m - 1, bound); ++j) target.set_coeff(j, Rat(1));
    return prod == target;
}

void write_f_cache(const FCoefficients& fc, const std::string& path) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("F cache: cannot open '" + tmp + "' for writing");
        out << "Fcoeffs v1 trunc=" << fc.trunc << "\n";
        for (long n = 1; n <= fc.trunc; ++n) out << n << " " << to_string(fc.logF[n]) << "\n";
        out.flush();
        if (!out) throw std::runtime_error("F cache: failed writing '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("F cache: cannot rename '" + tmp + "' to '" + path + "'");
    }
}

FCoefficients read_f_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("F cache: cannot open '" + path + "'");
    std::string header;
    std::getline(in, header);
    const std::string prefix = "Fcoeffs v1 trunc=";
    if (header.rfind(prefix, 0) != 0)
        throw std::invalid_argument("F cache: bad header in '" + path + "'");
    long trunc = 0;
    try {
        std::size_t used = 0;
        trunc = std::stol(header.substr(prefix.size()), &used);
        if (used != header.size() - prefix.size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
        throw std::invalid_argument("F cache: bad truncation in header of '" + path + "'");
    }
    if (trunc < 1) throw std::invalid_argument("F cache: truncation must be >= 1");

    FCoefficients fc;
    fc.trunc = trunc;
    fc.logF.assign(static_cast<std::size_t>(trunc) + 1, Rat(0));
    std::string line;
    for (long n = 1; n <= trunc; ++n) {
        if (!std::getline(in, line))
            throw std::invalid_argument("F cache: '" + path + "' ends at line " +
                                        std::to_string(n) + " of " + std::to_string(trunc));
        std::istringstream ls(line);
        long idx = 0;
        std::string value;
        if (!(ls >> idx >> value) || idx != n)
            throw std::invalid_argument("F cache: malformed record at line " +
                                        std::to_string(n + 1) + " of '" + path + "'");
        fc.logF[n] = parse_rat(value);
    }
    UniSeries lf(trunc);
    for (long n = 1; n <= trunc; ++n) lf.set_coeff(n, fc.logF[n]);
    fc.F = exp(lf);
    return fc;
}

}  // namespace ellgw
