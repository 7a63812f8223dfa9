#include "ellgw/exactnum.hpp"

#include <cctype>
#include <stdexcept>

namespace ellgw {

Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat(long num, long den) { return rat(Int(num), Int(den)); }

Int gcd(const Int& a, const Int& b) {
    if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

std::vector<Int> divisors(const Int& d) {
    if (d < 1)
        throw std::invalid_argument("divisors: argument must be >= 1, got " + to_string(d));
    std::vector<Int> low, high;
    for (Int i = 1; i * i <= d; ++i) {
        if (mpz_divisible_p(d.get_mpz_t(), i.get_mpz_t())) {
            low.push_back(i);
            Int j = d / i;
            if (j != i) high.push_back(j);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

Int sigma(const Int& d) {
    if (d < 1) return 0;
    Int s = 0;
    for (const Int& k : divisors(d)) s += k;
    return s;
}

Int sigma(const Rat& x) {
    if (x.get_den() != 1) return 0;
    return sigma(Int(x.get_num()));
}

std::string to_string(const Int& n) { return n.get_str(); }

// mpq_class prints "p/q", or "p" alone when the denominator is 1.
std::string to_string(const Rat& x) { return x.get_str(); }

Rat parse_rat(const std::string& s) {
    auto fail = [&]() -> void {
        throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
    };
    auto is_digit_run = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };

    std::size_t start = 0;
    if (start < s.size() && (s[start] == '-' || s[start] == '+')) ++start;
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_digit_run(start, s.size())) fail();
        return rat(Int(s), 1);
    }
    if (!is_digit_run(start, slash) || !is_digit_run(slash + 1, s.size())) fail();
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) fail();
    return rat(num, den);
}

Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("to_long: " + to_string(n) + " out of range");
    return n.get_si();
}

}  // namespace ellgw
