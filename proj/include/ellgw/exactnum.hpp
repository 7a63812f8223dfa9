#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ellgw {

// Exact arithmetic foundation. Every quantity in this library is either an
// arbitrary-precision integer or a rational in lowest terms with positive
// denominator; no floating point is used anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational num/den (reduced, den > 0). Rejects den == 0.
Rat rat(const Int& num, const Int& den = Int(1));
Rat rat(long num, long den = 1);

// Positive gcd; rejects (0, 0).
Int gcd(const Int& a, const Int& b);

// Ascending list of the positive divisors of d; rejects d < 1.
std::vector<Int> divisors(const Int& d);

// Sum-of-divisors function sigma(d) = sum_{k|d} k, extended by 0 to every
// argument that is not a positive integer.
Int sigma(const Int& d);
Int sigma(const Rat& x);

// Decimal / "p/q" string forms. All CLI, CSV and JSON output uses these.
std::string to_string(const Int& n);
std::string to_string(const Rat& x);

// Parses "p" or "p/q" (optionally signed, reduced on input). Rejects
// malformed strings and zero denominators.
Rat parse_rat(const std::string& s);

Int floor_rat(const Rat& x);

// Narrowing conversion with an overflow check, for loop bounds and sizes.
long to_long(const Int& n);

}  // namespace ellgw
