#include "doctest.h"

#include "ellgw/series.hpp"

using namespace ellgw;

namespace {

UniSeries geometric(long trunc) {
    UniSeries s(trunc);
    for (long n = 0; n <= trunc; ++n) s.set_coeff(n, Rat(1));
    return s;
}

}  // namespace

TEST_CASE("construction and coefficient access") {
    UniSeries s(3);
    CHECK(s.trunc() == 3);
    CHECK(s.is_zero());
    s.set_coeff(2, rat(1, 2));
    CHECK(s.coeff(2) == rat(1, 2));
    CHECK_FALSE(s.is_zero());
    CHECK_THROWS_AS(s.coeff(4), std::out_of_range);
    CHECK_THROWS_AS(s.set_coeff(-1, Rat(1)), std::out_of_range);
    CHECK_THROWS_AS(UniSeries(-1), std::invalid_argument);
}

TEST_CASE("products truncate at the smaller operand") {
    UniSeries a = UniSeries::one(4);
    a.set_coeff(1, Rat(1));  // 1 + t
    UniSeries b = UniSeries::one(4);
    b.set_coeff(1, Rat(-1));  // 1 - t
    UniSeries p = a * b;
    CHECK(p.trunc() == 4);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == -1);

    UniSeries c(2);
    c.set_coeff(0, Rat(3));
    c.set_coeff(1, Rat(1));
    UniSeries d(5);
    d.set_coeff(0, Rat(1));
    d.set_coeff(1, Rat(2));
    UniSeries q = d * c;  // (1+2t)(3+t)
    CHECK(q.trunc() == 2);
    CHECK(q.coeff(0) == 3);
    CHECK(q.coeff(1) == 7);
    CHECK(q.coeff(2) == 2);
}

TEST_CASE("geometric series annihilates 1 - t") {
    UniSeries lin = UniSeries::one(8);
    lin.set_coeff(1, Rat(-1));
    UniSeries p = lin * geometric(8);
    CHECK(p.coeff(0) == 1);
    for (long n = 1; n <= 8; ++n) CHECK(p.coeff(n) == 0);
}

TEST_CASE("truncated and stretched views") {
    UniSeries s(5);
    for (long n = 0; n <= 5; ++n) s.set_coeff(n, Rat(n));
    UniSeries t = s.truncated(2);
    CHECK(t.trunc() == 2);
    CHECK(t.coeff(2) == 2);
    CHECK_THROWS_AS(s.truncated(9), std::invalid_argument);

    UniSeries st = s.truncated(2).stretched(3, 7);
    CHECK(st.trunc() == 7);
    CHECK(st.coeff(3) == 1);
    CHECK(st.coeff(6) == 2);
    CHECK(st.coeff(4) == 0);
    // index 8/3 -> needs coefficient 2, trunc 1 is not enough
    CHECK_THROWS_AS(s.truncated(1).stretched(3, 8), std::invalid_argument);
}

TEST_CASE("log of 1 - t is the harmonic series") {
    UniSeries lin = UniSeries::one(6);
    lin.set_coeff(1, Rat(-1));
    UniSeries l = log(lin);
    for (long n = 1; n <= 6; ++n) CHECK(l.coeff(n) == rat(-1, n));
    CHECK_THROWS_AS(log(UniSeries::constant(Rat(2), 3)), std::invalid_argument);
}

TEST_CASE("exp of t has factorial denominators") {
    UniSeries t(7);
    t.set_coeff(1, Rat(1));
    UniSeries e = exp(t);
    Int fact(1);
    for (long n = 1; n <= 7; ++n) {
        fact *= n;
        CHECK(e.coeff(n) == rat(Int(1), fact));
    }
    CHECK_THROWS_AS(exp(UniSeries::one(3)), std::invalid_argument);
}

TEST_CASE("exp and log invert each other") {
    UniSeries a(12);
    a.set_coeff(0, Rat(1));
    a.set_coeff(1, rat(2, 3));
    a.set_coeff(3, rat(-5, 7));
    a.set_coeff(9, rat(11, 2));
    CHECK(exp(log(a)) == a);

    UniSeries l(12);
    l.set_coeff(1, rat(1, 2));
    l.set_coeff(2, Rat(-4));
    l.set_coeff(7, rat(3, 5));
    CHECK(log(exp(l)) == l);
}

TEST_CASE("rational powers") {
    UniSeries lin = UniSeries::one(10);
    lin.set_coeff(1, Rat(-1));

    CHECK(pow(lin, Rat(1)) == lin);

    UniSeries inv = pow(lin, Rat(-1));
    CHECK(inv == geometric(10));

    UniSeries sq = UniSeries::one(10);
    sq.set_coeff(2, Rat(-1));  // 1 - t^2
    UniSeries half = pow(sq, rat(1, 2));
    CHECK(half * half == sq);

    CHECK_THROWS_AS(pow(UniSeries(3), rat(1, 2)), std::invalid_argument);
}
