#include "doctest.h"

#include "ellgw/exactnum.hpp"

using namespace ellgw;

TEST_CASE("rat canonicalizes sign and gcd") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(1, -2) == rat(-1, 2));
    CHECK(rat(-6, -4) == rat(3, 2));
    CHECK(rat(0, 7) == Rat(0));
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("gcd is positive and rejects (0,0)") {
    CHECK(gcd(Int(4), Int(6)) == 2);
    CHECK(gcd(Int(-4), Int(6)) == 2);
    CHECK(gcd(Int(9), Int(28)) == 1);
    CHECK(gcd(Int(0), Int(5)) == 5);
    CHECK_THROWS_AS(gcd(Int(0), Int(0)), std::invalid_argument);
}

TEST_CASE("divisors ascend and cover") {
    CHECK(divisors(Int(1)) == std::vector<Int>{Int(1)});
    CHECK(divisors(Int(12)) == std::vector<Int>{Int(1), Int(2), Int(3), Int(4), Int(6), Int(12)});
    CHECK(divisors(Int(7)) == std::vector<Int>{Int(1), Int(7)});
    CHECK_THROWS_AS(divisors(Int(0)), std::invalid_argument);
    CHECK_THROWS_AS(divisors(Int(-3)), std::invalid_argument);
}

TEST_CASE("sigma on integers and its zero extension") {
    CHECK(sigma(Int(1)) == 1);
    CHECK(sigma(Int(6)) == 12);
    CHECK(sigma(Int(12)) == 28);
    CHECK(sigma(Int(0)) == 0);
    CHECK(sigma(Int(-3)) == 0);
    CHECK(sigma(rat(5, 2)) == 0);
    CHECK(sigma(Rat(Int(9))) == 13);
}

TEST_CASE("sigma equals the divisor sum up to 1000") {
    for (long d = 1; d <= 1000; ++d) {
        Int total(0);
        for (const Int& k : divisors(Int(d))) total += k;
        CHECK(sigma(Int(d)) == total);
    }
}

TEST_CASE("string round-trips") {
    CHECK(to_string(Int(-12)) == "-12");
    CHECK(to_string(rat(22, 8)) == "11/4");
    CHECK(to_string(Rat(5)) == "5");
    CHECK(parse_rat("11/4") == rat(11, 4));
    CHECK(parse_rat("-3") == Rat(-3));
    CHECK(parse_rat("6/4") == rat(3, 2));
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("2x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/2/3"), std::invalid_argument);
}

TEST_CASE("floor of rationals") {
    CHECK(floor_rat(rat(7, 2)) == 3);
    CHECK(floor_rat(rat(-7, 2)) == -4);
    CHECK(floor_rat(Rat(4)) == 4);
}

TEST_CASE("to_long guards overflow") {
    CHECK(to_long(Int(42)) == 42);
    Int big(1);
    big <<= 80;
    CHECK_THROWS_AS(to_long(big), std::overflow_error);
}
