#include "ellgw/jsonio.hpp"

namespace ellgw {

ordered_json sublattice_json(const Sublattice& lattice) {
    ordered_json j;
    j["a"] = to_long(lattice.a);
    j["b"] = to_long(lattice.b);
    j["k"] = to_long(lattice.k);
    j["d"] = to_long(lattice.d);
    return j;
}

ordered_json sublattice_list_json(const std::vector<Sublattice>& lattices) {
    ordered_json arr = ordered_json::array();
    for (const Sublattice& l : lattices) arr.push_back(sublattice_json(l));
    return arr;
}

ordered_json partition_json(const ModuliPartition& partition) {
    ordered_json j;
    j["plus"] = sublattice_list_json(partition.plus);
    j["minus"] = sublattice_list_json(partition.minus);
    j["counts"] = {{"plus", partition.plus.size()}, {"minus", partition.minus.size()}};
    return j;
}

ordered_json series_json(const SurfaceSeries& series) {
    ordered_json arr = ordered_json::array();
    for (const auto& [mono, coeff] : series.sorted_terms()) {
        ordered_json term;
        term["t"] = mono.t;
        term["fibers"] = mono.fibers;
        term["degree"] = to_string(monomial_degree(mono, series.spec()));
        term["coeff"] = to_string(coeff);
        arr.push_back(std::move(term));
    }
    return arr;
}

ordered_json collapsed_json(const SurfaceSeries& series) {
    ordered_json arr = ordered_json::array();
    for (const auto& [degree, coeff] : collapse_by_degree(series)) {
        ordered_json term;
        term["degree"] = to_string(degree);
        term["coeff"] = to_string(coeff);
        arr.push_back(std::move(term));
    }
    return arr;
}

ordered_json table_json(const LocalGWTable& table) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, value] : table.entries()) {
        const auto& [kind, d] = key;
        ordered_json row;
        row["kind"] = kind.type == FiberKind::Type::regular ? "regular" : "multiple";
        row["m_or_n"] = kind.param;
        row["d"] = to_long(d);
        row["value"] = to_string(value);
        arr.push_back(std::move(row));
    }
    return arr;
}

}  // namespace ellgw
