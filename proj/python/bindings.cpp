#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ellgw/exactnum.hpp"
#include "ellgw/gw0.hpp"
#include "ellgw/lattice.hpp"
#include "ellgw/local_gw.hpp"
#include "ellgw/surface.hpp"
#include "ellgw/surface_spec.hpp"
#include "ellgw/taubes.hpp"
#include "ellgw/verify.hpp"

namespace py = pybind11;

namespace {

using namespace ellgw;

// Values cross the boundary as decimal strings so nothing is truncated;
// Python gets native int / fractions.Fraction objects back.
py::object py_int(const Int& n) { return py::module_::import("builtins").attr("int")(to_string(n)); }

py::object py_frac(const Rat& x) {
    return py::module_::import("fractions").attr("Fraction")(to_string(x));
}

Int int_arg(const py::object& obj) { return Int(py::str(obj).cast<std::string>()); }

py::dict lattice_dict(const Sublattice& l) {
    py::dict d;
    d["a"] = py_int(l.a);
    d["b"] = py_int(l.b);
    d["k"] = py_int(l.k);
    d["d"] = py_int(l.d);
    return d;
}

py::list lattice_list(const std::vector<Sublattice>& ls) {
    py::list out;
    for (const Sublattice& l : ls) out.append(lattice_dict(l));
    return out;
}

py::list term_list(const SurfaceSeries& s) {
    py::list out;
    for (const auto& [mono, coeff] : s.sorted_terms()) {
        py::dict term;
        term["t"] = mono.t;
        py::list fibers;
        for (long e : mono.fibers) fibers.append(e);
        term["fibers"] = fibers;
        term["degree"] = py_frac(monomial_degree(mono, s.spec()));
        term["coeff"] = py_frac(coeff);
        out.append(term);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact local Gromov-Witten invariants of elliptic fibers";

    py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);

    m.def(
        "sigma", [](const py::object& d) { return py_int(sigma(int_arg(d))); },
        "Sum-of-divisors sigma(d); 0 when d is not a positive integer.", py::arg("d"));

    m.def(
        "divisors",
        [](const py::object& d) {
            py::list out;
            for (const Int& k : divisors(int_arg(d))) out.append(py_int(k));
            return out;
        },
        "Ascending positive divisors of d >= 1.", py::arg("d"));

    m.def(
        "enumerate_sublattices",
        [](long d) { return lattice_list(enumerate_sublattices(Int(d))); },
        "All sigma(d) index-d sublattices of Z+iZ as Hermite triples.", py::arg("d"));

    m.def(
        "partition_moduli",
        [](long m, long d) {
            ModuliPartition p = partition_moduli(Int(m), Int(d));
            py::dict out;
            out["plus"] = lattice_list(p.plus);
            out["minus"] = lattice_list(p.minus);
            return out;
        },
        "Moduli split by triviality of the pulled-back torsion bundle.", py::arg("m"),
        py::arg("d"));

    m.def(
        "local_gw_regular", [](long d) { return py_frac(local_gw_regular(Int(d))); },
        "GW_1^loc(F, d) = -sigma(d)/d.", py::arg("d"));

    m.def(
        "local_gw_multiple",
        [](long m, long d) { return py_frac(local_gw_multiple_closed(Int(m), Int(d))); },
        "GW_1^loc(F_m, d) = (sigma(d) - m*sigma(d/m))/d, closed form.", py::arg("m"),
        py::arg("d"));

    m.def(
        "local_gw_multiple_assembled",
        [](long m, long d) {
            return py_frac(m == 2 ? local_gw_assembled_m2(Int(d))
                                  : local_gw_multiple_assembled(Int(m), Int(d)));
        },
        "GW_1^loc(F_m, d) assembled from per-point moduli contributions.", py::arg("m"),
        py::arg("d"));

    m.def(
        "f_coefficients",
        [](long trunc) {
            FCoefficients fc = solve_F(trunc);
            py::list out;
            for (long n = 0; n <= trunc; ++n) out.append(py_frac(fc.F.coeff(n)));
            return out;
        },
        "Coefficients of F(t) up to t^trunc; prod_d F(t^d)^(-sigma(d)/d) = 1-t.",
        py::arg("trunc"));

    m.def(
        "log_f_coefficients",
        [](long trunc) {
            FCoefficients fc = solve_F(trunc);
            py::list out;
            for (long n = 0; n <= trunc; ++n) out.append(py_frac(fc.logF[n]));
            return out;
        },
        "Coefficients a_n of log F(t), index = n, a_0 = 0.", py::arg("trunc"));

    m.def(
        "gw0_terms",
        [](const std::string& spec_json, const std::string& bound) {
            SurfaceSpec spec = parse_spec(spec_json);
            return term_list(gw0_series(spec, parse_rat(bound)));
        },
        "Terms of GW^0_X for a spec JSON string, sorted by degree.", py::arg("spec_json"),
        py::arg("bound"));

    m.def(
        "gr_sides_equal",
        [](const std::string& spec_json, const std::string& bound) {
            SurfaceSpec spec = parse_spec(spec_json);
            Rat b = parse_rat(bound);
            return gr_series_gw_side(spec, b, required_trunc(spec, b)) ==
                   gr_series_closed_side(spec, b);
        },
        "Whether the Gr product equals the closed SW product at the bound.",
        py::arg("spec_json"), py::arg("bound"));

    m.def(
        "verify_suite",
        [](const std::string& name) {
            VerificationReport rep = run_suite(name);
            py::dict out;
            out["suite"] = rep.suite;
            out["cases"] = rep.cases;
            py::list failures;
            for (const VerificationFailure& f : rep.failures) {
                py::dict fd;
                fd["check"] = f.check;
                fd["detail"] = f.detail;
                failures.append(fd);
            }
            out["failures"] = failures;
            out["ms"] = rep.wall_ms;
            return out;
        },
        "Run an invariant suite: lattice, local, series, taubes, or all.", py::arg("name"));
}
