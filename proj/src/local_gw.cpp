#include "ellgw/local_gw.hpp"

#include <ostream>
#include <stdexcept>
#include <tuple>

namespace ellgw {

bool operator==(const FiberKind& x, const FiberKind& y) {
    return x.type == y.type && x.param == y.param;
}

bool operator<(const FiberKind& x, const FiberKind& y) {
    return std::tie(x.type, x.param) < std::tie(y.type, y.param);
}

Rat local_gw_regular(const Int& d) {
    if (d < 1) throw std::invalid_argument("local_gw_regular: d must be >= 1, got " + to_string(d));
    return rat(-sigma(d), d);
}

Rat local_gw_regular_multi(const Int& n, const Int& d) {
    if (n < 1)
        throw std::invalid_argument("local_gw_regular_multi: n must be >= 1, got " + to_string(n));
    return Rat(n) * local_gw_regular(d);
}

Rat local_gw_multiple_closed(const Int& m, const Int& d) {
    if (m < 2)
        throw std::invalid_argument("local_gw_multiple_closed: m must be >= 2, got " + to_string(m));
    if (d < 1)
        throw std::invalid_argument("local_gw_multiple_closed: d must be >= 1, got " + to_string(d));
    // sigma(d/m) vanishes unless m | d, so one expression covers both cases.
    return rat(sigma(d) - m * sigma(rat(d, m)), d);
}

Contribution contribution(const Int& m, const Sublattice& lattice) {
    if (m < 2) throw std::invalid_argument("contribution: m must be >= 2");
    if (!factors_through(lattice, m))
        return {rat(1, lattice.d), ContributionRoute::generic_plus};
    if (m == 2) return {rat(-1, lattice.d), ContributionRoute::m2_sign};
    return {std::nullopt, ContributionRoute::lifted_aggregate};
}

Rat local_gw_multiple_assembled(const Int& m, const Int& d) {
    if (m < 3)
        throw std::invalid_argument(
            "local_gw_multiple_assembled: m must be >= 3 (use local_gw_assembled_m2 for m = 2)");
    if (d < 1)
        throw std::invalid_argument("local_gw_multiple_assembled: d must be >= 1, got " +
                                    to_string(d));
    ModuliPartition part = partition_moduli(m, d);
    Rat total = 0;
    for (const Sublattice& lattice : part.plus) total += *contribution(m, lattice).value;
    // The minus part contributes through its lift: each point maps to a
    // degree-d/m cover of the m-fold unwinding, whose canonical divisor is
    // (m-1) regular fibers, and the whole aggregate is weighted by 1/m.
    if (mpz_divisible_p(d.get_mpz_t(), m.get_mpz_t()))
        total += rat(1, m) * local_gw_regular_multi(m - 1, d / m);
    return total;
}

Rat local_gw_assembled_m2(const Int& d) {
    if (d < 1)
        throw std::invalid_argument("local_gw_assembled_m2: d must be >= 1, got " + to_string(d));
    Rat total = 0;
    for (const Sublattice& lattice : enumerate_sublattices(d))
        total += *contribution(2, lattice).value;
    return total;
}

void LocalGWTable::set(const FiberKind& kind, const Int& d, Rat value) {
    entries_[{kind, d}] = std::move(value);
}

const Rat* LocalGWTable::find(const FiberKind& kind, const Int& d) const {
    auto it = entries_.find({kind, d});
    return it == entries_.end() ? nullptr : &it->second;
}

void LocalGWTable::write_csv(std::ostream& os) const {
    os << "kind,m_or_n,d,value\n";
    for (const auto& [key, value] : entries_) {
        const auto& [kind, d] = key;
        os << (kind.type == FiberKind::Type::regular ? "regular" : "multiple") << ','
           << kind.param << ',' << to_string(d) << ',' << to_string(value) << '\n';
    }
}

LocalGWTable build_local_gw_table(const FiberKind& kind, const Int& dmax, GwMethod method) {
    if (dmax < 1)
        throw std::invalid_argument("build_local_gw_table: dmax must be >= 1, got " +
                                    to_string(dmax));
    LocalGWTable table;
    if (kind.type == FiberKind::Type::regular) {
        if (method != GwMethod::closed)
            throw std::invalid_argument(
                "build_local_gw_table: the assembly route applies to multiple fibers only");
        for (Int d = 1; d <= dmax; ++d)
            table.set(kind, d, local_gw_regular_multi(kind.param, d));
        return table;
    }
    Int m(kind.param);
    for (Int d = 1; d <= dmax; ++d) {
        Rat value;
        if (method == GwMethod::closed) {
            value = local_gw_multiple_closed(m, d);
        } else {
            value = (m == 2) ? local_gw_assembled_m2(d) : local_gw_multiple_assembled(m, d);
            if (method == GwMethod::both) {
                Rat closed = local_gw_multiple_closed(m, d);
                if (value != closed)
                    throw std::logic_error("build_local_gw_table: route mismatch at m=" +
                                           to_string(m) + " d=" + to_string(d) + ": assembly " +
                                           to_string(value) + " vs closed " + to_string(closed));
            }
        }
        table.set(kind, d, value);
    }
    return table;
}

}  // namespace ellgw
