#include "ellgw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ellgw/exactnum.hpp"
#include "ellgw/gw0.hpp"
#include "ellgw/lattice.hpp"
#include "ellgw/local_gw.hpp"
#include "ellgw/series.hpp"
#include "ellgw/surface.hpp"
#include "ellgw/surface_spec.hpp"
#include "ellgw/taubes.hpp"

namespace ellgw {

namespace {

// Detail strings are only built on failure.
template <class DetailFn>
void check(VerificationReport& rep, bool ok, const char* name, DetailFn&& detail) {
    ++rep.cases;
    if (!ok) rep.failures.push_back({name, detail()});
}

// std::uniform_int_distribution is implementation-defined, so suites roll
// their own modulo draw to stay reproducible across toolchains.
long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

Rat draw_rat(std::mt19937_64& rng) { return rat(draw(rng, -9, 9), draw(rng, 1, 9)); }

UniSeries draw_series(std::mt19937_64& rng, long trunc, const Rat& c0) {
    UniSeries s(trunc);
    s.set_coeff(0, c0);
    for (long n = 1; n <= trunc; ++n) s.set_coeff(n, draw_rat(rng));
    return s;
}

SurfaceSeries draw_surface(std::mt19937_64& rng, const SurfaceSpec& spec, const Rat& bound,
                           int nterms) {
    SurfaceSeries s(spec, bound);
    for (int i = 0; i < nterms; ++i) {
        FiberMonomial raw;
        raw.t = draw(rng, 0, 3);
        for (const Fiber& f : spec.fibers) raw.fibers.push_back(draw(rng, 0, 2 * f.m - 1));
        s.add_term(raw, draw_rat(rng));
    }
    return s;
}

std::string show_monomial(const FiberMonomial& m) {
    std::ostringstream os;
    os << "t^" << m.t << " [";
    for (std::size_t k = 0; k < m.fibers.size(); ++k) os << (k ? "," : "") << m.fibers[k];
    os << "]";
    return os.str();
}

std::string show_lattice(const Sublattice& l) {
    return "(a=" + to_string(l.a) + ", b=" + to_string(l.b) + ", k=" + to_string(l.k) + ")";
}

void run_lattice_suite(VerificationReport& rep) {
    // sigma is multiplicative on coprime pairs.
    for (long a = 1; a <= 200; ++a)
        for (long b = a + 1; b <= 200; ++b) {
            if (gcd(Int(a), Int(b)) != 1) continue;
            check(rep, sigma(Int(a * b)) == sigma(Int(a)) * sigma(Int(b)),
                  "sigma multiplicative", [&] {
                      return "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                             " sigma(ab)=" + to_string(sigma(Int(a * b))) +
                             " sigma(a)sigma(b)=" + to_string(Int(sigma(Int(a)) * sigma(Int(b))));
                  });
        }

    // sigma agrees with the divisor enumeration.
    for (long d = 1; d <= 1000; ++d) {
        Int total(0);
        for (const Int& k : divisors(Int(d))) total += k;
        check(rep, sigma(Int(d)) == total, "sigma vs divisor sum", [&] {
            return "d=" + std::to_string(d) + " sigma=" + to_string(sigma(Int(d))) +
                   " sum=" + to_string(total);
        });
    }

    // Moduli enumeration has sigma(d) distinct points.
    for (long d = 1; d <= 300; ++d) {
        auto lattices = enumerate_sublattices(Int(d));
        std::set<Sublattice> distinct(lattices.begin(), lattices.end());
        check(rep, Int(static_cast<long>(lattices.size())) == sigma(Int(d)),
              "sublattice count", [&] {
                  return "d=" + std::to_string(d) + " count=" + std::to_string(lattices.size()) +
                         " sigma=" + to_string(sigma(Int(d)));
              });
        check(rep, distinct.size() == lattices.size(), "sublattices distinct",
              [&] { return "d=" + std::to_string(d); });
    }

    // Partition cardinalities against the closed counts.
    for (long m = 2; m <= 8; ++m)
        for (long d = 1; d <= 300; ++d) {
            auto part = partition_moduli(Int(m), Int(d));
            Int want_minus = sigma(rat(d, m));
            Int want_plus = sigma(Int(d)) - want_minus;
            check(rep,
                  Int(static_cast<long>(part.minus.size())) == want_minus &&
                      Int(static_cast<long>(part.plus.size())) == want_plus,
                  "partition counts", [&] {
                      return "m=" + std::to_string(m) + " d=" + std::to_string(d) + " plus=" +
                             std::to_string(part.plus.size()) + "/" + to_string(want_plus) +
                             " minus=" + std::to_string(part.minus.size()) + "/" +
                             to_string(want_minus);
                  });
        }

    // The torsion criterion agrees with factoring through the unwinding,
    // for every admissible period class independently.
    for (long d = 1; d <= 100; ++d) {
        auto lattices = enumerate_sublattices(Int(d));
        for (long m = 2; m <= 8; ++m)
            for (const PeriodClass& pc : admissible_period_classes(Int(m)))
                for (const Sublattice& l : lattices)
                    check(rep, torsion_pullback_trivial(l, pc) == factors_through(l, Int(m)),
                          "torsion criterion vs factoring", [&] {
                              return "m=" + std::to_string(m) + " k1=" + to_string(pc.k1) +
                                     " L=" + show_lattice(l);
                          });
    }

    // Admissible classes are exactly the units mod m.
    for (long m = 2; m <= 24; ++m) {
        std::vector<long> got;
        for (const PeriodClass& pc : admissible_period_classes(Int(m))) got.push_back(to_long(pc.k1));
        std::vector<long> want;
        for (long k1 = 1; k1 < m; ++k1)
            if (gcd(Int(k1), Int(m)) == 1) want.push_back(k1);
        check(rep, got == want, "admissible period classes", [&] {
            return "m=" + std::to_string(m) + " got " + std::to_string(got.size()) +
                   " classes, want " + std::to_string(want.size());
        });
    }
}

void run_local_suite(VerificationReport& rep) {
    // The assembly route reproduces the closed form.
    for (long m = 3; m <= 8; ++m)
        for (long d = 1; d <= 300; ++d) {
            Rat assembled = local_gw_multiple_assembled(Int(m), Int(d));
            Rat closed = local_gw_multiple_closed(Int(m), Int(d));
            check(rep, assembled == closed, "assembled vs closed (m>=3)", [&] {
                return "m=" + std::to_string(m) + " d=" + std::to_string(d) + " assembled=" +
                       to_string(assembled) + " closed=" + to_string(closed);
            });
        }

    // The per-point signed route for m=2.
    for (long d = 1; d <= 300; ++d) {
        Rat assembled = local_gw_assembled_m2(Int(d));
        Rat closed = local_gw_multiple_closed(Int(2), Int(d));
        check(rep, assembled == closed, "signed route (m=2)", [&] {
            return "d=" + std::to_string(d) + " assembled=" + to_string(assembled) +
                   " closed=" + to_string(closed);
        });
    }

    for (long m = 2; m <= 8; ++m)
        for (long d = 1; d <= 100; ++d) {
            if (d % m == 0) continue;
            Rat v = local_gw_multiple_closed(Int(m), Int(d));
            check(rep, v == rat(sigma(Int(d)), Int(d)), "m does not divide d", [&] {
                return "m=" + std::to_string(m) + " d=" + std::to_string(d) +
                       " value=" + to_string(v);
            });
            check(rep, v > 0, "multiple-fiber value positive off m|d",
                  [&] { return "m=" + std::to_string(m) + " d=" + std::to_string(d); });
        }

    for (long d = 1; d <= 100; ++d)
        check(rep, local_gw_regular(Int(d)) < 0, "regular value negative",
              [&] { return "d=" + std::to_string(d); });

    for (long n = 1; n <= 5; ++n)
        for (long d = 1; d <= 50; ++d)
            check(rep,
                  local_gw_regular_multi(Int(n), Int(d)) == Rat(n) * local_gw_regular(Int(d)),
                  "n-fold regular scaling",
                  [&] { return "n=" + std::to_string(n) + " d=" + std::to_string(d); });
}

void run_series_suite(VerificationReport& rep) {
    std::mt19937_64 rng(0x5eed2026);
    const SurfaceSpec spec = make_spec(Int(0), {2, 3});
    const Rat bound(4);

    // Ring laws in the quotient ring.
    for (int i = 0; i < 500; ++i) {
        SurfaceSeries a = draw_surface(rng, spec, bound, 6);
        SurfaceSeries b = draw_surface(rng, spec, bound, 6);
        SurfaceSeries c = draw_surface(rng, spec, bound, 6);
        check(rep, a * b == b * a, "surf_mul commutative",
              [&] { return "case " + std::to_string(i); });
        check(rep, (a * b) * c == a * (b * c), "surf_mul associative",
              [&] { return "case " + std::to_string(i); });
    }

    // Carry normal form is idempotent and preserves total degree.
    for (int i = 0; i < 500; ++i) {
        FiberMonomial raw;
        raw.t = draw(rng, 0, 6);
        for (const Fiber& f : spec.fibers) raw.fibers.push_back(draw(rng, 0, 4 * f.m));
        FiberMonomial norm = normalize_monomial(raw, spec);
        check(rep, normalize_monomial(norm, spec) == norm, "normalization idempotent",
              [&] { return show_monomial(raw); });
        check(rep, monomial_degree(raw, spec) == monomial_degree(norm, spec),
              "normalization degree-preserving", [&] { return show_monomial(raw); });
    }

    // exp and log invert each other at truncation 50.
    for (int i = 0; i < 500; ++i) {
        UniSeries l = draw_series(rng, 50, Rat(0));
        UniSeries a = draw_series(rng, 50, Rat(1));
        check(rep, log(exp(l)) == l, "log(exp) round-trip",
              [&] { return "case " + std::to_string(i); });
        check(rep, exp(log(a)) == a, "exp(log) round-trip",
              [&] { return "case " + std::to_string(i); });
    }

    // Rational powers: (a^{p/q})^q = a^p.
    for (int i = 0; i < 500; ++i) {
        UniSeries a = draw_series(rng, 20, Rat(1));
        long p = draw(rng, -3, 3);
        long q = draw(rng, 1, 4);
        UniSeries root = pow(a, rat(p, q));
        UniSeries qth = UniSeries::one(20);
        for (long j = 0; j < q; ++j) qth = qth * root;
        check(rep, qth == pow(a, Rat(p)), "rational power consistency", [&] {
            return "case " + std::to_string(i) + " p=" + std::to_string(p) +
                   " q=" + std::to_string(q);
        });
    }

    // Field axioms for the coefficient type itself.
    for (int i = 0; i < 500; ++i) {
        Rat x = draw_rat(rng), y = draw_rat(rng), z = draw_rat(rng);
        check(rep, (x + y) + z == x + (y + z), "Rat associativity",
              [&] { return to_string(x) + ", " + to_string(y) + ", " + to_string(z); });
        check(rep, x * (y + z) == x * y + x * z, "Rat distributivity",
              [&] { return to_string(x) + ", " + to_string(y) + ", " + to_string(z); });
        if (x != 0)
            check(rep, x * (Rat(1) / x) == 1, "Rat inverse", [&] { return to_string(x); });
    }
}

void run_taubes_suite(VerificationReport& rep) {
    // Defining identity of F at truncation 50.
    FCoefficients fc = solve_F(50);
    check(rep, f_defining_identity_holds(fc, 50), "F defining identity",
          [] { return std::string("bound 50"); });

    // Univariate shadow of each multiple-fiber factor.
    for (long m = 2; m <= 6; ++m)
        check(rep, per_fiber_product_check(m, 40, 40), "per-fiber product",
              [&] { return "m=" + std::to_string(m) + " bound 40"; });

    // Full identity, both sides in the quotient ring.
    struct Case {
        Int c_pi;
        std::vector<long> mults;
    };
    const Case cases[] = {{Int(0), {}},       {Int(0), {2, 3}},   {Int(1), {2}},
                          {Int(2), {}},       {Int(2), {3, 3}},   {Int(1), {2, 2, 5}}};
    for (const Case& c : cases) {
        SurfaceSpec spec = make_spec(c.c_pi, c.mults);
        Rat bound(10);
        SurfaceSeries gw = gr_series_gw_side(spec, bound, required_trunc(spec, bound));
        SurfaceSeries closed = gr_series_closed_side(spec, bound);
        check(rep, gw == closed, "Gr = SW identity", [&] {
            std::string mults;
            for (long m : c.mults) mults += (mults.empty() ? "" : ",") + std::to_string(m);
            return "c_pi=" + to_string(c.c_pi) + " fibers=[" + mults + "] bound 10";
        });
    }

    // Regular factors alone rebuild (1-t)^{c_pi}.
    for (long c = 0; c <= 3; ++c) {
        SurfaceSpec spec = make_spec(Int(c), {});
        Rat bound(20);
        check(rep,
              gr_series_gw_side(spec, bound, required_trunc(spec, bound)) ==
                  gr_series_closed_side(spec, bound),
              "regular factors vs (1-t)^c_pi", [&] { return "c_pi=" + std::to_string(c); });
    }

    // Pure t^e coefficients of the surface sum, re-derived from scratch:
    // the regular part plus the carries t_{m_k}^{e*m_k} -> t^e.
    {
        const Case gw0_cases[] = {{Int(1), {2}}, {Int(2), {2, 3}}, {Int(0), {2, 2, 5}},
                                  {Int(1), {3, 4}}};
        for (const Case& c : gw0_cases) {
            SurfaceSpec spec = make_spec(c.c_pi, c.mults);
            SurfaceSeries s = gw0_series(spec, Rat(8));
            for (long e = 1; e <= 8; ++e) {
                Rat want = Rat(spec.c_pi) * local_gw_regular(Int(e));
                for (const Fiber& f : spec.fibers)
                    want += local_gw_multiple_closed(Int(f.m), Int(e) * Int(f.m));
                check(rep, s.coeff(t_power(spec, e)) == want, "pure-fiber coefficient", [&] {
                    return "c_pi=" + to_string(c.c_pi) + " e=" + std::to_string(e) + " got " +
                           to_string(s.coeff(t_power(spec, e))) + " want " + to_string(want);
                });
            }
        }
    }

    // Spec emission round-trips.
    {
        const Case rt_cases[] = {{Int(0), {}}, {Int(1), {2}}, {Int(-2), {2, 3, 3}}};
        for (const Case& c : rt_cases) {
            SurfaceSpec spec = make_spec(c.c_pi, c.mults);
            std::string text = emit_spec(spec);
            SurfaceSpec back = parse_spec(text);
            check(rep, back == spec && emit_spec(back) == text, "spec round-trip",
                  [&] { return text; });
        }
    }
}

}  // namespace

std::vector<std::string> suite_names() { return {"lattice", "local", "series", "taubes", "all"}; }

VerificationReport run_suite(const std::string& name) {
    VerificationReport rep;
    rep.suite = name;
    auto start = std::chrono::steady_clock::now();
    if (name == "lattice") {
        run_lattice_suite(rep);
    } else if (name == "local") {
        run_local_suite(rep);
    } else if (name == "series") {
        run_series_suite(rep);
    } else if (name == "taubes") {
        run_taubes_suite(rep);
    } else if (name == "all") {
        run_lattice_suite(rep);
        run_local_suite(rep);
        run_series_suite(rep);
        run_taubes_suite(rep);
    } else {
        throw std::invalid_argument("run_suite: unknown suite '" + name +
                                    "' (expected lattice, local, series, taubes, or all)");
    }
    auto stop = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return rep;
}

}  // namespace ellgw
