#include <sstream>

#include "doctest.h"

#include "ellgw/local_gw.hpp"

using namespace ellgw;

TEST_CASE("regular fiber closed form") {
    CHECK(local_gw_regular(Int(1)) == Rat(-1));
    CHECK(local_gw_regular(Int(2)) == rat(-3, 2));
    CHECK(local_gw_regular(Int(6)) == Rat(-2));
    CHECK_THROWS_AS(local_gw_regular(Int(0)), std::invalid_argument);
}

TEST_CASE("n-fold regular fiber scales linearly") {
    CHECK(local_gw_regular_multi(Int(1), Int(5)) == rat(-6, 5));
    CHECK(local_gw_regular_multi(Int(3), Int(2)) == rat(-9, 2));
    CHECK(local_gw_regular_multi(Int(2), Int(2)) == Rat(-3));
    CHECK_THROWS_AS(local_gw_regular_multi(Int(0), Int(1)), std::invalid_argument);
}

TEST_CASE("multiple fiber closed form") {
    CHECK(local_gw_multiple_closed(Int(2), Int(2)) == rat(1, 2));
    CHECK(local_gw_multiple_closed(Int(3), Int(3)) == rat(1, 3));
    CHECK(local_gw_multiple_closed(Int(3), Int(6)) == rat(1, 2));
    CHECK(local_gw_multiple_closed(Int(4), Int(2)) == rat(3, 2));
    CHECK_THROWS_AS(local_gw_multiple_closed(Int(1), Int(2)), std::invalid_argument);

    // off multiples of m the subtracted term vanishes
    for (long d = 1; d <= 50; ++d)
        if (d % 3 != 0)
            CHECK(local_gw_multiple_closed(Int(3), Int(d)) == rat(sigma(Int(d)), Int(d)));
}

TEST_CASE("per-point contributions by route") {
    auto lat = [](long a, long b, long k) {
        return Sublattice{Int(a), Int(b), Int(k), Int(a * b)};
    };
    Contribution c = contribution(Int(3), lat(4, 1, 2));
    CHECK(c.route == ContributionRoute::generic_plus);
    CHECK(c.value == rat(1, 4));

    c = contribution(Int(2), lat(1, 2, 0));
    CHECK(c.route == ContributionRoute::m2_sign);
    CHECK(c.value == rat(-1, 2));

    c = contribution(Int(2), lat(2, 1, 1));
    CHECK(c.route == ContributionRoute::generic_plus);
    CHECK(c.value == rat(1, 2));

    c = contribution(Int(3), lat(1, 3, 0));
    CHECK(c.route == ContributionRoute::lifted_aggregate);
    CHECK_FALSE(c.value.has_value());
}

TEST_CASE("assembly reproduces the closed form") {
    CHECK(local_gw_multiple_assembled(Int(3), Int(6)) == rat(1, 2));
    CHECK(local_gw_multiple_assembled(Int(3), Int(2)) == rat(3, 2));
    CHECK(local_gw_multiple_assembled(Int(5), Int(5)) == rat(1, 5));
    CHECK_THROWS_AS(local_gw_multiple_assembled(Int(2), Int(4)), std::invalid_argument);

    for (long m = 3; m <= 5; ++m)
        for (long d = 1; d <= 40; ++d)
            CHECK(local_gw_multiple_assembled(Int(m), Int(d)) ==
                  local_gw_multiple_closed(Int(m), Int(d)));
}

TEST_CASE("signed per-point route for m = 2") {
    CHECK(local_gw_assembled_m2(Int(1)) == Rat(1));
    CHECK(local_gw_assembled_m2(Int(2)) == rat(1, 2));
    CHECK(local_gw_assembled_m2(Int(4)) == rat(1, 4));
    for (long d = 1; d <= 60; ++d)
        CHECK(local_gw_assembled_m2(Int(d)) == local_gw_multiple_closed(Int(2), Int(d)));
}

TEST_CASE("table construction and CSV emission") {
    LocalGWTable table = build_local_gw_table(FiberKind::multiple(2), Int(3), GwMethod::both);
    const Rat* v = table.find(FiberKind::multiple(2), Int(2));
    REQUIRE(v != nullptr);
    CHECK(*v == rat(1, 2));

    std::ostringstream os;
    table.write_csv(os);
    CHECK(os.str() ==
          "kind,m_or_n,d,value\n"
          "multiple,2,1,1\n"
          "multiple,2,2,1/2\n"
          "multiple,2,3,4/3\n");
}

TEST_CASE("regular tables only have a closed route") {
    CHECK_THROWS_AS(build_local_gw_table(FiberKind::regular(1), Int(5), GwMethod::assembly),
                    std::invalid_argument);
    LocalGWTable table = build_local_gw_table(FiberKind::regular(2), Int(2), GwMethod::closed);
    const Rat* v = table.find(FiberKind::regular(2), Int(2));
    REQUIRE(v != nullptr);
    CHECK(*v == Rat(-3));
}
