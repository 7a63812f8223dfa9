#pragma once

#include <map>
#include <vector>

#include "ellgw/exactnum.hpp"
#include "ellgw/series.hpp"
#include "ellgw/surface_spec.hpp"

namespace ellgw {

// Monomial t^{e0} * prod_k t_{m_k}^{e_k} in the quotient ring
// Q[t, t_{m_1}, ..., t_{m_n}] / (t_{m_k}^{m_k} - t). The fiber exponent
// vector always has one entry per declared fiber of the ambient spec.
// Normal form: 0 <= e_k < m_k, carries absorbed into e0; this makes the
// representative unique, so map keys compare exponent tuples directly.
struct FiberMonomial {
    long t = 0;
    std::vector<long> fibers;
};

bool operator==(const FiberMonomial& x, const FiberMonomial& y);
bool operator<(const FiberMonomial& x, const FiberMonomial& y);

// Carry normal form: e_k mod m_k with the quotient added to the t
// exponent. Rejects negative exponents and wrong-length fiber vectors.
FiberMonomial normalize_monomial(const FiberMonomial& raw, const SurfaceSpec& spec);

// Total t-degree e0 + sum_k e_k / m_k; invariant under normalization.
Rat monomial_degree(const FiberMonomial& mono, const SurfaceSpec& spec);

FiberMonomial unit_monomial(const SurfaceSpec& spec);
// t^{e0}, and the d-th power of the k-th fiber variable (0-based k).
FiberMonomial t_power(const SurfaceSpec& spec, long e0);
FiberMonomial fiber_power(const SurfaceSpec& spec, std::size_t k, long d);

// Element of the quotient ring truncated at a rational total-degree bound:
// terms of degree > bound are identically dropped, which is a ring
// congruence since every degree is >= 0. Nonzero coefficients only.
class SurfaceSeries {
public:
    SurfaceSeries(SurfaceSpec spec, Rat bound);
    static SurfaceSeries one(const SurfaceSpec& spec, const Rat& bound);

    const SurfaceSpec& spec() const { return spec_; }
    const Rat& bound() const { return bound_; }
    const std::map<FiberMonomial, Rat>& terms() const { return terms_; }

    // Normalizes, drops terms above the bound, accumulates, erases zeros.
    void add_term(const FiberMonomial& raw, const Rat& coeff);
    Rat coeff(const FiberMonomial& raw) const;
    bool is_zero() const { return terms_.empty(); }

    // Terms in emission order: by total degree, then by exponent tuple.
    std::vector<std::pair<FiberMonomial, Rat>> sorted_terms() const;

private:
    SurfaceSpec spec_;
    Rat bound_;
    std::map<FiberMonomial, Rat> terms_;
};

// Binary operations require identical specs and combine at the smaller
// bound. Equality is exact: same spec, same bound, same nonzero terms.
SurfaceSeries operator+(const SurfaceSeries& a, const SurfaceSeries& b);
SurfaceSeries operator*(const SurfaceSeries& a, const SurfaceSeries& b);
bool operator==(const SurfaceSeries& a, const SurfaceSeries& b);

// A(M) = sum_n coeff_n(A) * M^n at truncation bound. M must have positive
// total degree and A.trunc must cover every power below the bound, i.e.
// A.trunc >= floor(bound / degree(M)); both are checked, never padded.
SurfaceSeries subst_monomial(const UniSeries& a, const FiberMonomial& mono,
                             const SurfaceSpec& spec, const Rat& bound);

// Degree-collapsed view: total degree -> summed coefficient, ascending,
// zero sums kept out.
std::vector<std::pair<Rat, Rat>> collapse_by_degree(const SurfaceSeries& s);

}  // namespace ellgw
