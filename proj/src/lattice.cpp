#include "ellgw/lattice.hpp"

#include <stdexcept>
#include <tuple>

namespace ellgw {

bool operator==(const Sublattice& x, const Sublattice& y) {
    return x.a == y.a && x.b == y.b && x.k == y.k;
}

bool operator<(const Sublattice& x, const Sublattice& y) {
    return std::tie(x.a, x.b, x.k) < std::tie(y.a, y.b, y.k);
}

std::vector<Sublattice> enumerate_sublattices(const Int& d) {
    if (d < 1)
        throw std::invalid_argument("enumerate_sublattices: d must be >= 1, got " + to_string(d));
    std::vector<Sublattice> out;
    for (const Int& a : divisors(d)) {
        Int b = d / a;
        for (Int k = 0; k < a; ++k) out.push_back({a, b, k, d});
    }
    return out;
}

std::vector<PeriodClass> admissible_period_classes(const Int& m) {
    if (m < 2)
        throw std::invalid_argument("admissible_period_classes: m must be >= 2, got " +
                                    to_string(m));
    std::vector<PeriodClass> out;
    for (Int k1 = 0; k1 < m; ++k1) {
        for (Int k2 = 0; k2 < m; ++k2) {
            // k1 + i*k2 must vanish mod Z + (mi)Z; the real part always
            // does, the imaginary part forces m | k2.
            if (!mpz_divisible_p(k2.get_mpz_t(), m.get_mpz_t())) continue;
            // order of (k1/m, k2/m) in C/(Z + iZ) must be exactly m
            Int o1 = m / gcd(k1, m);
            Int o2 = m / gcd(k2, m);
            Int ord = o1 * o2 / gcd(o1, o2);
            if (ord == m) out.push_back({m, k1});
        }
    }
    return out;
}

bool factors_through(const Sublattice& lattice, const Int& m) {
    if (m < 2) throw std::invalid_argument("factors_through: m must be >= 2");
    return mpz_divisible_p(lattice.b.get_mpz_t(), m.get_mpz_t()) != 0;
}

bool torsion_pullback_trivial(const Sublattice& lattice, const PeriodClass& pc) {
    if (pc.m < 2) throw std::invalid_argument("torsion_pullback_trivial: m must be >= 2");
    // d*k1/m belongs to a*Z + (b*i + k)*Z iff it is an integer in a*Z.
    Int x = lattice.d * pc.k1;
    if (!mpz_divisible_p(x.get_mpz_t(), pc.m.get_mpz_t())) return false;
    Int q = x / pc.m;
    return mpz_divisible_p(q.get_mpz_t(), lattice.a.get_mpz_t()) != 0;
}

ModuliPartition partition_moduli(const Int& m, const Int& d) {
    std::vector<Sublattice> all = enumerate_sublattices(d);
    PeriodClass pc = admissible_period_classes(m).front();
    ModuliPartition part;
    for (Sublattice& lattice : all) {
        bool trivial = torsion_pullback_trivial(lattice, pc);
        // The two criteria provably agree; check it anyway on every point.
        if (trivial != factors_through(lattice, m))
            throw std::logic_error(
                "partition_moduli: torsion criterion disagrees with factorization at (a=" +
                to_string(lattice.a) + ", b=" + to_string(lattice.b) + ", k=" +
                to_string(lattice.k) + "), m=" + to_string(m));
        (trivial ? part.minus : part.plus).push_back(std::move(lattice));
    }
    return part;
}

}  // namespace ellgw
