#include "ellgw/surface.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellgw {

bool operator==(const FiberMonomial& x, const FiberMonomial& y) {
    return x.t == y.t && x.fibers == y.fibers;
}

bool operator<(const FiberMonomial& x, const FiberMonomial& y) {
    if (x.t != y.t) return x.t < y.t;
    return x.fibers < y.fibers;
}

FiberMonomial normalize_monomial(const FiberMonomial& raw, const SurfaceSpec& spec) {
    if (raw.fibers.size() != spec.fibers.size())
        throw std::invalid_argument("normalize_monomial: " + std::to_string(raw.fibers.size()) +
                                    " fiber exponents for a spec with " +
                                    std::to_string(spec.fibers.size()) + " fibers");
    if (raw.t < 0) throw std::invalid_argument("normalize_monomial: negative t exponent");
    FiberMonomial out = raw;
    for (std::size_t k = 0; k < out.fibers.size(); ++k) {
        long e = out.fibers[k];
        if (e < 0) throw std::invalid_argument("normalize_monomial: negative fiber exponent");
        long m = spec.fibers[k].m;
        out.t += e / m;
        out.fibers[k] = e % m;
    }
    return out;
}

Rat monomial_degree(const FiberMonomial& mono, const SurfaceSpec& spec) {
    if (mono.fibers.size() != spec.fibers.size())
        throw std::invalid_argument("monomial_degree: fiber exponent count mismatch");
    Rat deg(mono.t);
    for (std::size_t k = 0; k < mono.fibers.size(); ++k)
        deg += rat(mono.fibers[k], spec.fibers[k].m);
    return deg;
}

FiberMonomial unit_monomial(const SurfaceSpec& spec) {
    return {0, std::vector<long>(spec.fibers.size(), 0)};
}

FiberMonomial t_power(const SurfaceSpec& spec, long e0) {
    if (e0 < 0) throw std::invalid_argument("t_power: negative exponent");
    FiberMonomial m = unit_monomial(spec);
    m.t = e0;
    return m;
}

FiberMonomial fiber_power(const SurfaceSpec& spec, std::size_t k, long d) {
    if (k >= spec.fibers.size()) throw std::invalid_argument("fiber_power: no such fiber");
    if (d < 0) throw std::invalid_argument("fiber_power: negative exponent");
    FiberMonomial m = unit_monomial(spec);
    m.fibers[k] = d;
    return normalize_monomial(m, spec);
}

SurfaceSeries::SurfaceSeries(SurfaceSpec spec, Rat bound)
    : spec_(std::move(spec)), bound_(std::move(bound)) {
    if (bound_ < 0) throw std::invalid_argument("SurfaceSeries: bound must be >= 0");
}

SurfaceSeries SurfaceSeries::one(const SurfaceSpec& spec, const Rat& bound) {
    SurfaceSeries s(spec, bound);
    s.add_term(unit_monomial(spec), Rat(1));
    return s;
}

void SurfaceSeries::add_term(const FiberMonomial& raw, const Rat& coeff) {
    if (coeff == 0) return;
    FiberMonomial mono = normalize_monomial(raw, spec_);
    if (monomial_degree(mono, spec_) > bound_) return;
    auto [it, inserted] = terms_.emplace(std::move(mono), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat SurfaceSeries::coeff(const FiberMonomial& raw) const {
    auto it = terms_.find(normalize_monomial(raw, spec_));
    return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<std::pair<FiberMonomial, Rat>> SurfaceSeries::sorted_terms() const {
    std::vector<std::pair<FiberMonomial, Rat>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [this](const auto& x, const auto& y) {
        Rat dx = monomial_degree(x.first, spec_);
        Rat dy = monomial_degree(y.first, spec_);
        if (dx != dy) return dx < dy;
        return x.first < y.first;
    });
    return out;
}

namespace {

void require_same_spec(const SurfaceSeries& a, const SurfaceSeries& b, const char* op) {
    if (a.spec() != b.spec())
        throw std::invalid_argument(std::string(op) + ": operands built over different specs");
}

}  // namespace

SurfaceSeries operator+(const SurfaceSeries& a, const SurfaceSeries& b) {
    require_same_spec(a, b, "SurfaceSeries addition");
    SurfaceSeries s(a.spec(), std::min(a.bound(), b.bound()));
    for (const auto& [mono, c] : a.terms()) s.add_term(mono, c);
    for (const auto& [mono, c] : b.terms()) s.add_term(mono, c);
    return s;
}

SurfaceSeries operator*(const SurfaceSeries& a, const SurfaceSeries& b) {
    require_same_spec(a, b, "surf_mul");
    SurfaceSeries s(a.spec(), std::min(a.bound(), b.bound()));
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            FiberMonomial prod = ma;
            prod.t += mb.t;
            for (std::size_t k = 0; k < prod.fibers.size(); ++k) prod.fibers[k] += mb.fibers[k];
            s.add_term(prod, ca * cb);
        }
    }
    return s;
}

bool operator==(const SurfaceSeries& a, const SurfaceSeries& b) {
    return a.spec() == b.spec() && a.bound() == b.bound() && a.terms() == b.terms();
}

SurfaceSeries subst_monomial(const UniSeries& a, const FiberMonomial& mono,
                             const SurfaceSpec& spec, const Rat& bound) {
    FiberMonomial base = normalize_monomial(mono, spec);
    Rat deg = monomial_degree(base, spec);
    if (deg <= 0) throw std::invalid_argument("subst_monomial: monomial must have positive degree");
    long nmax = to_long(floor_rat(bound / deg));
    if (a.trunc() < nmax)
        throw std::invalid_argument("subst_monomial: series truncation " +
                                    std::to_string(a.trunc()) + " < required " +
                                    std::to_string(nmax));
    SurfaceSeries s(spec, bound);
    FiberMonomial power = unit_monomial(spec);
    for (long n = 0; n <= nmax; ++n) {
        s.add_term(power, a.coeff(n));
        power.t += base.t;
        for (std::size_t k = 0; k < power.fibers.size(); ++k) power.fibers[k] += base.fibers[k];
        power = normalize_monomial(power, spec);
    }
    return s;
}

std::vector<std::pair<Rat, Rat>> collapse_by_degree(const SurfaceSeries& s) {
    std::map<Rat, Rat> acc;
    for (const auto& [mono, c] : s.terms()) acc[monomial_degree(mono, s.spec())] += c;
    std::vector<std::pair<Rat, Rat>> out;
    for (const auto& [deg, c] : acc)
        if (c != 0) out.emplace_back(deg, c);
    return out;
}

}  // namespace ellgw
