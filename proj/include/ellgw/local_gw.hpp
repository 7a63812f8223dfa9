#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <utility>

#include "ellgw/exactnum.hpp"
#include "ellgw/lattice.hpp"

namespace ellgw {

// Fiber type of a connected canonical-divisor component: a regular fiber
// taken with weight n (the component n*F), or a multiple fiber of
// multiplicity m >= 2.
struct FiberKind {
    enum class Type { regular, multiple };
    Type type = Type::regular;
    long param = 1;  // weight n >= 1, or multiplicity m >= 2

    static FiberKind regular(long n = 1) { return {Type::regular, n}; }
    static FiberKind multiple(long m) { return {Type::multiple, m}; }
};

bool operator==(const FiberKind& x, const FiberKind& y);
bool operator<(const FiberKind& x, const FiberKind& y);

// Closed forms: GW(F, d) = -sigma(d)/d for a regular fiber, the n-fold
// version n * GW(F, d), and (sigma(d) - m*sigma(d/m))/d for a multiple
// fiber (the single expression covers m = 2 and m >= 3).
Rat local_gw_regular(const Int& d);
Rat local_gw_regular_multi(const Int& n, const Int& d);
Rat local_gw_multiple_closed(const Int& m, const Int& d);

enum class ContributionRoute { generic_plus, m2_sign, lifted_aggregate };

// Signed weight a single moduli point adds to the virtual count. Points
// with trivial pullback and m >= 3 only contribute in aggregate through
// the lift to the (m-1)F local model, so no per-point value exists for
// them and value is left empty.
struct Contribution {
    std::optional<Rat> value;
    ContributionRoute route = ContributionRoute::generic_plus;
};

Contribution contribution(const Int& m, const Sublattice& lattice);

// Assembly routes, independent of the closed forms above: sum of 1/d over
// the plus part plus the lifted aggregate (m >= 3), and the per-point
// +-1/d summation for m = 2.
Rat local_gw_multiple_assembled(const Int& m, const Int& d);
Rat local_gw_assembled_m2(const Int& d);

// Table of local invariants keyed by fiber kind and degree, with the
// CSV emission format "kind,m_or_n,d,value".
class LocalGWTable {
public:
    using Key = std::pair<FiberKind, Int>;

    void set(const FiberKind& kind, const Int& d, Rat value);
    const Rat* find(const FiberKind& kind, const Int& d) const;
    const std::map<Key, Rat>& entries() const { return entries_; }

    void write_csv(std::ostream& os) const;

private:
    std::map<Key, Rat> entries_;
};

enum class GwMethod { closed, assembly, both };

// Fills a table for degrees 1..dmax. With GwMethod::both the closed and
// assembly routes are both evaluated and must agree.
LocalGWTable build_local_gw_table(const FiberKind& kind, const Int& dmax, GwMethod method);

}  // namespace ellgw
