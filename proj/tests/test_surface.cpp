#include "doctest.h"

#include "ellgw/gw0.hpp"
#include "ellgw/jsonio.hpp"
#include "ellgw/surface.hpp"
#include "ellgw/surface_spec.hpp"

using namespace ellgw;

TEST_CASE("spec parsing accepts both c_pi forms") {
    SurfaceSpec s = parse_spec(R"({"c_pi":0,"multiplicities":[2,3]})");
    CHECK(s.c_pi == 0);
    REQUIRE(s.fibers.size() == 2);
    CHECK(s.fibers[0].m == 2);
    CHECK(s.fibers[0].label == "f1");
    CHECK(s.fibers[1].m == 3);

    s = parse_spec(R"({"chi_X":3,"base_genus":0,"multiplicities":[]})");
    CHECK(s.c_pi == 1);
    CHECK(s.fibers.empty());

    // both forms together must agree
    CHECK_NOTHROW(parse_spec(R"({"c_pi":1,"chi_X":3,"base_genus":0,"multiplicities":[]})"));
    CHECK_THROWS_AS(parse_spec(R"({"c_pi":2,"chi_X":3,"base_genus":0,"multiplicities":[]})"),
                    SpecValidationError);
}

TEST_CASE("spec validation rejects bad input") {
    CHECK_THROWS_AS(parse_spec(R"({"c_pi":1,"multiplicities":[1]})"), SpecValidationError);
    CHECK_THROWS_AS(parse_spec(R"({"multiplicities":[2]})"), SpecValidationError);
    CHECK_THROWS_AS(parse_spec(R"({"c_pi":1})"), SpecValidationError);
    CHECK_THROWS_AS(parse_spec(R"({"c_pi":1,"chi_X":3,"multiplicities":[]})"),
                    SpecValidationError);
    CHECK_THROWS_AS(parse_spec(R"({"c_pi":1,"multiplicities":[2],"labels":["a","b"]})"),
                    SpecValidationError);
    CHECK_THROWS_AS(parse_spec(R"({"c_pi":1,"multiplicities":[2],"bogus":true})"),
                    SpecValidationError);
    CHECK_THROWS_AS(parse_spec("{"), SpecParseError);
    CHECK_THROWS_AS(parse_spec("[]"), SpecValidationError);
    CHECK_THROWS_AS(load_spec("/nonexistent/spec.json"), SpecIoError);
}

TEST_CASE("labels override the defaults") {
    SurfaceSpec s = parse_spec(R"({"c_pi":0,"multiplicities":[2,2],"labels":["north","south"]})");
    CHECK(s.fibers[0].label == "north");
    CHECK(s.fibers[1].label == "south");
}

TEST_CASE("emit and parse round-trip") {
    SurfaceSpec s = make_spec(Int(-1), {2, 3, 3});
    std::string text = emit_spec(s);
    SurfaceSpec back = parse_spec(text);
    CHECK(back == s);
    CHECK(emit_spec(back) == text);
}

TEST_CASE("carry normal form") {
    SurfaceSpec spec = make_spec(Int(0), {2, 3});
    FiberMonomial raw{1, {5, 7}};
    FiberMonomial norm = normalize_monomial(raw, spec);
    CHECK(norm.t == 5);  // 1 + 5/2 + 7/3 carries
    CHECK(norm.fibers == std::vector<long>{1, 1});
    CHECK(normalize_monomial(norm, spec) == norm);
    CHECK(monomial_degree(raw, spec) == monomial_degree(norm, spec));
    CHECK(monomial_degree(norm, spec) == rat(35, 6));
    CHECK_THROWS_AS(normalize_monomial(FiberMonomial{-1, {0, 0}}, spec), std::invalid_argument);
    CHECK_THROWS_AS(normalize_monomial(FiberMonomial{0, {1}}, spec), std::invalid_argument);
}

TEST_CASE("surface products honor the quotient relation") {
    SurfaceSpec spec2 = make_spec(Int(0), {2});
    Rat bound(4);
    SurfaceSeries a(spec2, bound);
    a.add_term(unit_monomial(spec2), Rat(1));
    a.add_term(fiber_power(spec2, 0, 1), Rat(1));  // 1 + t_2
    SurfaceSeries sq = a * a;
    CHECK(sq.coeff(unit_monomial(spec2)) == 1);
    CHECK(sq.coeff(fiber_power(spec2, 0, 1)) == 2);
    CHECK(sq.coeff(t_power(spec2, 1)) == 1);
    CHECK(sq.terms().size() == 3);

    SurfaceSpec spec3 = make_spec(Int(0), {3});
    SurfaceSeries cyc(spec3, Rat(1));
    for (long j = 0; j < 3; ++j) cyc.add_term(fiber_power(spec3, 0, j), Rat(1));
    SurfaceSeries lin(spec3, Rat(1));
    lin.add_term(unit_monomial(spec3), Rat(1));
    lin.add_term(fiber_power(spec3, 0, 1), Rat(-1));
    SurfaceSeries p = cyc * lin;  // telescopes to 1 - t_3^3 = 1 - t
    CHECK(p.coeff(unit_monomial(spec3)) == 1);
    CHECK(p.coeff(t_power(spec3, 1)) == -1);
    CHECK(p.terms().size() == 2);
}

TEST_CASE("operands must share a spec") {
    SurfaceSeries a(make_spec(Int(0), {2}), Rat(2));
    SurfaceSeries b(make_spec(Int(0), {3}), Rat(2));
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("substitution of a univariate series at a monomial") {
    SurfaceSpec spec = make_spec(Int(0), {2});
    UniSeries onePlus = UniSeries::one(1);
    onePlus.set_coeff(1, Rat(1));  // 1 + u

    SurfaceSeries s = subst_monomial(onePlus, fiber_power(spec, 0, 1), spec, rat(1, 2));
    CHECK(s.coeff(unit_monomial(spec)) == 1);
    CHECK(s.coeff(fiber_power(spec, 0, 1)) == 1);
    CHECK(s.terms().size() == 2);

    UniSeries geo(2);
    for (long n = 0; n <= 2; ++n) geo.set_coeff(n, Rat(1));
    s = subst_monomial(geo, fiber_power(spec, 0, 1), spec, Rat(1));
    CHECK(s.coeff(unit_monomial(spec)) == 1);
    CHECK(s.coeff(fiber_power(spec, 0, 1)) == 1);
    CHECK(s.coeff(t_power(spec, 1)) == 1);  // t_2^2 carries to t
    CHECK(s.terms().size() == 3);

    UniSeries lin = UniSeries::one(3);
    lin.set_coeff(1, Rat(-1));
    s = subst_monomial(lin, t_power(spec, 1), spec, Rat(3));
    CHECK(s.coeff(unit_monomial(spec)) == 1);
    CHECK(s.coeff(t_power(spec, 1)) == -1);
    CHECK(s.terms().size() == 2);

    CHECK_THROWS_AS(subst_monomial(lin, unit_monomial(spec), spec, Rat(1)),
                    std::invalid_argument);
    // bound 3 at degree 1/2 needs coefficients through u^6
    CHECK_THROWS_AS(subst_monomial(lin, fiber_power(spec, 0, 1), spec, Rat(3)),
                    std::invalid_argument);
}

TEST_CASE("collapse by total degree") {
    SurfaceSpec spec = make_spec(Int(0), {2, 2});
    SurfaceSeries s(spec, Rat(2));
    s.add_term(fiber_power(spec, 0, 1), Rat(1));
    s.add_term(fiber_power(spec, 1, 1), Rat(2));
    s.add_term(t_power(spec, 1), rat(-1, 2));
    auto collapsed = collapse_by_degree(s);
    REQUIRE(collapsed.size() == 2);
    CHECK(collapsed[0] == std::pair<Rat, Rat>(rat(1, 2), Rat(3)));
    CHECK(collapsed[1] == std::pair<Rat, Rat>(Rat(1), rat(-1, 2)));
}

TEST_CASE("gw0 of the trivial surface vanishes") {
    SurfaceSpec spec = make_spec(Int(0), {});
    CHECK(gw0_series(spec, Rat(10)).is_zero());
}

TEST_CASE("gw0 regular part") {
    SurfaceSpec spec = make_spec(Int(1), {});
    SurfaceSeries s = gw0_series(spec, Rat(2));
    CHECK(s.coeff(t_power(spec, 1)) == Rat(-1));
    CHECK(s.coeff(t_power(spec, 2)) == rat(-3, 2));
    CHECK(s.terms().size() == 2);
}

TEST_CASE("gw0 carries multiple-fiber powers onto t") {
    SurfaceSpec spec = make_spec(Int(1), {2});
    SurfaceSeries s = gw0_series(spec, Rat(1));
    CHECK(s.coeff(fiber_power(spec, 0, 1)) == Rat(1));
    CHECK(s.coeff(t_power(spec, 1)) == rat(-1, 2));
    CHECK(s.terms().size() == 2);
}

TEST_CASE("series JSON is ordered by degree then exponents") {
    SurfaceSpec spec = make_spec(Int(0), {2, 3});
    SurfaceSeries s(spec, Rat(2));
    s.add_term(t_power(spec, 1), Rat(5));
    s.add_term(fiber_power(spec, 0, 1), rat(1, 2));
    s.add_term(fiber_power(spec, 1, 1), rat(-2, 3));
    CHECK(series_json(s).dump() ==
          R"([{"t":0,"fibers":[0,1],"degree":"1/3","coeff":"-2/3"},)"
          R"({"t":0,"fibers":[1,0],"degree":"1/2","coeff":"1/2"},)"
          R"({"t":1,"fibers":[0,0],"degree":"1","coeff":"5"}])");
    CHECK(collapsed_json(s).dump() ==
          R"([{"degree":"1/3","coeff":"-2/3"},{"degree":"1/2","coeff":"1/2"},)"
          R"({"degree":"1","coeff":"5"}])");
}

TEST_CASE("partition JSON carries counts") {
    ordered_json j = partition_json(partition_moduli(Int(2), Int(4)));
    CHECK(j["counts"]["plus"] == 4);
    CHECK(j["counts"]["minus"] == 3);
    CHECK(j["plus"].size() == 4);
    CHECK(j["minus"][0] == ordered_json({{"a", 1}, {"b", 4}, {"k", 0}, {"d", 4}}));
}
