#pragma once

#include <vector>

#include "ellgw/exactnum.hpp"

namespace ellgw {

// Index-d sublattice of Z + iZ in Hermite form: a*Z + (b*i + k)*Z with
// d = a*b and 0 <= k < a. These triples parameterize the degree-d
// holomorphic covers of the elliptic curve C/(Z + iZ), so a full
// enumeration for fixed d is the moduli space itself.
struct Sublattice {
    Int a;
    Int b;
    Int k;
    Int d;
};

bool operator==(const Sublattice& x, const Sublattice& y);
bool operator<(const Sublattice& x, const Sublattice& y);

// Period class of the torsion normal bundle N_m = O(p - q): the integral
// of dz from q to p is k1/m with gcd(m, k1) = 1. The imaginary component
// is identically zero for admissible classes and is not stored.
struct PeriodClass {
    Int m;
    Int k1;
};

// All sigma(d) Hermite triples of index d, ordered by (a, k). Rejects d < 1.
std::vector<Sublattice> enumerate_sublattices(const Int& d);

// Exhaustive filter over (k1, k2) in [0, m)^2: keeps the pairs whose point
// k1/m + i*k2/m is trivial after pullback to C/(Z + (mi)Z) and has order
// exactly m in C/(Z + iZ). Survivors have k2 = 0 and gcd(m, k1) = 1.
std::vector<PeriodClass> admissible_period_classes(const Int& m);

// True iff the cover factors through the m-fold unwinding of the fiber,
// i.e. a | d/m, equivalently m | b.
bool factors_through(const Sublattice& lattice, const Int& m);

// True iff d*k1/m lies in a*Z + (b*i + k)*Z, decided purely by integer
// divisibility: m | d*k1 and then a | (d*k1)/m. This is the condition for
// the pulled-back torsion bundle to be trivial.
bool torsion_pullback_trivial(const Sublattice& lattice, const PeriodClass& pc);

// Moduli split by h^0 of the pulled-back torsion bundle: minus holds the
// covers with trivial pullback (h^0 = 1), plus the rest (h^0 = 0).
struct ModuliPartition {
    std::vector<Sublattice> plus;
    std::vector<Sublattice> minus;
};

ModuliPartition partition_moduli(const Int& m, const Int& d);

}  // namespace ellgw
