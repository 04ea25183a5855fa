#include "ck/arith.hpp"

#include <numeric>

namespace ck {

Z floordiv(Z a, Z b) {
  Z q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Z mod(Z a, Z b) { return a - floordiv(a, b) * b; }

Z gcdz(Z a, Z b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

ExtGcd ext_gcd(Z a, Z b) {
  // Iterative extended Euclid; result g >= 0.
  Z old_r = a, r = b;
  Z old_x = 1, x = 0;
  Z old_y = 0, y = 1;
  while (r != 0) {
    Z q = old_r / r;
    Z t = old_r - q * r; old_r = r; r = t;
    t = old_x - q * x; old_x = x; x = t;
    t = old_y - q * y; old_y = y; y = t;
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  return {old_r, old_x, old_y};
}

Z mod_inverse(Z q, Z p) {
  if (p < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
  if (p == 1) return 0;
  auto e = ext_gcd(mod(q, p), p);
  if (e.g != 1)
    throw NotCoprime("mod_inverse: " + std::to_string(q) + " not invertible mod " +
                     std::to_string(p));
  return mod(e.x, p);
}

Fraction frac(Z num, Z den) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  if (den < 0) { num = -num; den = -den; }
  Z g = gcdz(num, den);
  if (g > 1) { num /= g; den /= g; }
  return {num, den};
}

bool operator<(const Fraction& a, const Fraction& b) {
  return a.num * b.den < b.num * a.den;
}

Fraction mediant(const Fraction& a, const Fraction& b) {
  return frac(a.num + b.num, a.den + b.den);
}

std::string to_string(const Fraction& f) {
  return std::to_string(f.num) + "/" + std::to_string(f.den);
}

ContinuedFraction continued_fraction(const Fraction& f) {
  // Floor-based Euclid keeps a_i > 0 for i >= 1, and the last partial
  // quotient is automatically > 1 (remainders strictly decrease), so the
  // normal form needs no fixup.
  ContinuedFraction cf;
  Z num = f.num, den = f.den;
  for (;;) {
    Z a = floordiv(num, den);
    cf.a.push_back(a);
    Z r = num - a * den;
    if (r == 0) break;
    num = den;
    den = r;
  }
  return cf;
}

Fraction cf_value(const ContinuedFraction& cf) {
  if (cf.a.empty()) throw std::invalid_argument("cf_value: empty expansion");
  Z num = 1, den = 0;  // value of the empty tail is 1/0
  for (auto it = cf.a.rbegin(); it != cf.a.rend(); ++it) {
    // new value = a + den/num
    Z n2 = *it * num + den;
    den = num;
    num = n2;
  }
  return frac(num, den);
}

std::vector<Fraction> farey_sequence(Z n) {
  if (n < 1) throw std::invalid_argument("farey_sequence: n >= 1 required");
  std::vector<Fraction> out;
  // Standard next-term recurrence from consecutive pairs.
  Z a = 0, b = 1, c = 1, d = n;
  out.push_back({0, 1});
  while (c <= n) {
    out.push_back({c, d});
    Z k = (n + b) / d;
    Z c2 = k * c - a, d2 = k * d - b;
    a = c; b = d; c = c2; d = d2;
  }
  return out;
}

}  // namespace ck
