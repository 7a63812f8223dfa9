#pragma once

#include "json.hpp"

#include "ellgw/lattice.hpp"
#include "ellgw/local_gw.hpp"
#include "ellgw/surface.hpp"

namespace ellgw {

// JSON emission for the CLI. Structural integers (exponents, indices,
// lattice entries) are JSON numbers; every rational is a "p" or "p/q"
// string so nothing is ever rounded. Key order and term order are fixed,
// so equal inputs serialize to equal bytes.
using ordered_json = nlohmann::ordered_json;

ordered_json sublattice_json(const Sublattice& lattice);
ordered_json sublattice_list_json(const std::vector<Sublattice>& lattices);

// {"plus": [...], "minus": [...], "counts": {"plus": N, "minus": N}}
ordered_json partition_json(const ModuliPartition& partition);

// [{"t": e0, "fibers": [e1, ...], "degree": "p/q", "coeff": "p/q"}, ...]
// sorted by total degree, then by exponent tuple.
ordered_json series_json(const SurfaceSeries& series);

// [{"degree": "p/q", "coeff": "p/q"}, ...] ascending by degree.
ordered_json collapsed_json(const SurfaceSeries& series);

// [{"kind": "regular"|"multiple", "m_or_n": N, "d": N, "value": "p/q"}, ...]
ordered_json table_json(const LocalGWTable& table);

}  // namespace ellgw
