#pragma once

#include <vector>

#include "ellgw/exactnum.hpp"

namespace ellgw {

// Truncated formal power series over Rat. A series of truncation N carries
// exact coefficients of t^0 .. t^N; nothing is known past the truncation,
// so operations never silently extend it. Binary operations combine at the
// smaller truncation.
class UniSeries {
public:
    UniSeries() : coeffs_(1, Rat(0)) {}
    explicit UniSeries(long trunc);
    static UniSeries constant(const Rat& c, long trunc);
    static UniSeries one(long trunc) { return constant(Rat(1), trunc); }
    // c * t^n, requires n <= trunc
    static UniSeries monomial(const Rat& c, long n, long trunc);

    long trunc() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rat& coeff(long n) const;
    void set_coeff(long n, Rat value);

    bool is_zero() const;

    // Prefix of the first t+1 coefficients; requires t <= trunc.
    UniSeries truncated(long t) const;
    // Substitution t -> t^d truncated at new_trunc; requires every needed
    // source coefficient (index <= new_trunc/d) to be within trunc.
    UniSeries stretched(long d, long new_trunc) const;

private:
    std::vector<Rat> coeffs_;
};

UniSeries operator+(const UniSeries& a, const UniSeries& b);
UniSeries operator-(const UniSeries& a, const UniSeries& b);
UniSeries operator*(const UniSeries& a, const UniSeries& b);
UniSeries operator*(const Rat& c, const UniSeries& a);
bool operator==(const UniSeries& a, const UniSeries& b);

// log for constant term exactly 1, exp for constant term exactly 0, and
// the rational power a^r = exp(r * log a) for constant term 1. All exact
// to the truncation of the argument.
UniSeries log(const UniSeries& a);
UniSeries exp(const UniSeries& a);
UniSeries pow(const UniSeries& a, const Rat& r);

}  // namespace ellgw
