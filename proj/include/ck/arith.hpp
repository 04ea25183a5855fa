// Exact small-integer arithmetic: fractions, continued fractions, Farey
// sequences, modular inverses. Everything is int64; the sweeps in this
// project stay far below overflow range.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ck {

using Z = long long;

struct NotCoprime : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Floor division/remainder; b > 0. C++ '/' truncates toward zero, which is
// wrong for the grading floors with negative numerators.
Z floordiv(Z a, Z b);
Z mod(Z a, Z b);  // in [0, b)

Z gcdz(Z a, Z b);  // nonnegative

struct ExtGcd {
  Z g, x, y;  // a*x + b*y = g >= 0
};
ExtGcd ext_gcd(Z a, Z b);

// q^{-1} mod p, in [0, p). p >= 1; p == 1 gives 0.
Z mod_inverse(Z q, Z p);

struct Fraction {
  Z num = 0;
  Z den = 1;  // > 0, gcd(|num|, den) = 1

  bool operator==(const Fraction&) const = default;
};

Fraction frac(Z num, Z den);
bool operator<(const Fraction& a, const Fraction& b);
Fraction mediant(const Fraction& a, const Fraction& b);
std::string to_string(const Fraction& f);

// Normal form: a_i > 0 for i >= 1 and the last term > 1 unless the whole
// expansion is a single integer. Integers n give [n].
struct ContinuedFraction {
  std::vector<Z> a;
};

ContinuedFraction continued_fraction(const Fraction& f);
Fraction cf_value(const ContinuedFraction& cf);

// All reduced x/y with 0 <= x <= y <= n, increasing. n >= 1.
std::vector<Fraction> farey_sequence(Z n);

}  // namespace ck
