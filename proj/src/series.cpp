#include "ellgw/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellgw {

UniSeries::UniSeries(long trunc) {
    if (trunc < 0) throw std::invalid_argument("UniSeries: trunc must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(trunc) + 1, Rat(0));
}

UniSeries UniSeries::constant(const Rat& c, long trunc) {
    UniSeries s(trunc);
    s.coeffs_[0] = c;
    return s;
}

UniSeries UniSeries::monomial(const Rat& c, long n, long trunc) {
    UniSeries s(trunc);
    s.set_coeff(n, c);
    return s;
}

const Rat& UniSeries::coeff(long n) const {
    if (n < 0 || n > trunc())
        throw std::out_of_range("UniSeries::coeff: index " + std::to_string(n) +
                                " outside truncation " + std::to_string(trunc()));
    return coeffs_[static_cast<std::size_t>(n)];
}

void UniSeries::set_coeff(long n, Rat value) {
    if (n < 0 || n > trunc())
        throw std::out_of_range("UniSeries::set_coeff: index " + std::to_string(n) +
                                " outside truncation " + std::to_string(trunc()));
    coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

bool UniSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

UniSeries UniSeries::truncated(long t) const {
    if (t < 0 || t > trunc())
        throw std::invalid_argument("UniSeries::truncated: requested truncation " +
                                    std::to_string(t) + " exceeds known coefficients");
    UniSeries s(t);
    std::copy(coeffs_.begin(), coeffs_.begin() + t + 1, s.coeffs_.begin());
    return s;
}

UniSeries UniSeries::stretched(long d, long new_trunc) const {
    if (d < 1) throw std::invalid_argument("UniSeries::stretched: d must be >= 1");
    if (new_trunc / d > trunc())
        throw std::invalid_argument("UniSeries::stretched: insufficient truncation " +
                                    std::to_string(trunc()) + " for target " +
                                    std::to_string(new_trunc) + " with step " + std::to_string(d));
    UniSeries s(new_trunc);
    for (long n = 0; n * d <= new_trunc; ++n) s.coeffs_[n * d] = coeffs_[n];
    return s;
}

UniSeries operator+(const UniSeries& a, const UniSeries& b) {
    UniSeries s(std::min(a.trunc(), b.trunc()));
    for (long n = 0; n <= s.trunc(); ++n) s.set_coeff(n, a.coeff(n) + b.coeff(n));
    return s;
}

UniSeries operator-(const UniSeries& a, const UniSeries& b) {
    UniSeries s(std::min(a.trunc(), b.trunc()));
    for (long n = 0; n <= s.trunc(); ++n) s.set_coeff(n, a.coeff(n) - b.coeff(n));
    return s;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    UniSeries s(std::min(a.trunc(), b.trunc()));
    long t = s.trunc();
    for (long i = 0; i <= t; ++i) {
        const Rat& ai = a.coeff(i);
        if (ai == 0) continue;
        for (long j = 0; i + j <= t; ++j) {
            const Rat& bj = b.coeff(j);
            if (bj == 0) continue;
            s.set_coeff(i + j, s.coeff(i + j) + ai * bj);
        }
    }
    return s;
}

UniSeries operator*(const Rat& c, const UniSeries& a) {
    UniSeries s(a.trunc());
    if (c == 0) return s;
    for (long n = 0; n <= a.trunc(); ++n) s.set_coeff(n, c * a.coeff(n));
    return s;
}

bool operator==(const UniSeries& a, const UniSeries& b) {
    if (a.trunc() != b.trunc()) return false;
    for (long n = 0; n <= a.trunc(); ++n)
        if (a.coeff(n) != b.coeff(n)) return false;
    return true;
}

// With a = exp(l): n*a_n = sum_{j=1}^{n} j*l_j*a_{n-j}, so the j = n term
// isolates l_n = a_n - (1/n) * sum_{j<n} j*l_j*a_{n-j}.
UniSeries log(const UniSeries& a) {
    if (a.coeff(0) != 1)
        throw std::invalid_argument("log: series must have constant term 1, got " +
                                    to_string(a.coeff(0)));
    UniSeries l(a.trunc());
    for (long n = 1; n <= a.trunc(); ++n) {
        Rat s = 0;
        for (long j = 1; j < n; ++j) {
            const Rat& lj = l.coeff(j);
            if (lj == 0) continue;
            s += Rat(j) * lj * a.coeff(n - j);
        }
        l.set_coeff(n, a.coeff(n) - s / Rat(n));
    }
    return l;
}

// e = exp(a) satisfies n*e_n = sum_{j=1}^{n} j*a_j*e_{n-j}.
UniSeries exp(const UniSeries& a) {
    if (a.coeff(0) != 0)
        throw std::invalid_argument("exp: series must have constant term 0, got " +
                                    to_string(a.coeff(0)));
    UniSeries e(a.trunc());
    e.set_coeff(0, Rat(1));
    for (long n = 1; n <= a.trunc(); ++n) {
        Rat s = 0;
        for (long j = 1; j <= n; ++j) {
            const Rat& aj = a.coeff(j);
            if (aj == 0) continue;
            s += Rat(j) * aj * e.coeff(n - j);
        }
        e.set_coeff(n, s / Rat(n));
    }
    return e;
}

UniSeries pow(const UniSeries& a, const Rat& r) {
    if (a.coeff(0) != 1)
        throw std::invalid_argument("pow: series must have constant term 1, got " +
                                    to_string(a.coeff(0)));
    return exp(r * log(a));
}

}  // namespace ellgw
