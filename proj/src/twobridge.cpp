// Two-bridge knot invariants; see ck/twobridge.hpp.

#include "ck/twobridge.hpp"

#include <string>

namespace ck {

// Odd representative of v mod 2u in (-u, u); the Alexander and signature
// formulas below need an odd numerator.
static Z odd_rep(Z u, Z v) { return v % 2 != 0 ? v : v - u; }

TwoBridge two_bridge(Z u, Z v) {
  if (u <= 0 || u % 2 == 0)
    throw InvalidParameters("two-bridge u must be odd positive, got " +
                            std::to_string(u));
  if (u == 1) {
    if (v != 0 && v != 1)
      throw InvalidParameters("two-bridge v must be 0 or 1 when u = 1, got " +
                              std::to_string(v));
    return {1, v};
  }
  Z vr = mod(v, u);
  if (gcdz(u, vr) != 1)
    throw InvalidParameters("two-bridge parameters not coprime: u = " +
                            std::to_string(u) + ", v = " + std::to_string(vr));
  return {u, vr};
}

TwoBridge two_bridge_mirror(const TwoBridge& k) {
  if (k.u == 1) return {1, 1 - k.v};
  return {k.u, k.u - k.v};
}

TwoBridge derived_two_bridge(const TwoBridge& k) {
  if (2 * k.v >= k.u)
    throw InvalidParameters("derived two-bridge needs u > 2v, got u = " +
                            std::to_string(k.u) + ", v = " +
                            std::to_string(k.v));
  Z u2 = k.u - 2 * k.v;
  return {u2, mod(k.v, u2)};
}

bool two_bridge_equivalent(const TwoBridge& a, const TwoBridge& b) {
  if (a.u != b.u) return false;
  if (a.u == 1) return true;
  return b.v == a.v || b.v == mod_inverse(a.v, a.u);
}

Z two_bridge_signature(const TwoBridge& k) {
  if (k.u == 1) return 0;
  Z b = odd_rep(k.u, k.v), s = 0;
  for (Z i = 1; i < k.u; ++i) s += mod(floordiv(i * b, k.u), 2) == 0 ? 1 : -1;
  return s;
}

std::vector<int> epsilon_sequence(Z u, Z v, Z n) {
  if (u <= 0 || u % 2 == 0 || n < 0)
    throw InvalidParameters("epsilon_sequence needs odd u > 0 and n >= 0");
  std::vector<int> e;
  e.reserve(static_cast<size_t>(n));
  for (Z i = 1; i <= n; ++i)
    e.push_back(mod(floordiv(i * v, u), 2) == 0 ? 1 : -1);
  return e;
}

LaurentPoly alexander_two_bridge(const TwoBridge& k) {
  if (k.u == 1) return LaurentPoly::one();
  Z b = odd_rep(k.u, k.v);
  // Delta(t) = t^(-sigma/2) sum_i (-1)^i t^(S_i) with S_i the partial sums
  // of (-1)^floor(jb/u). S_i and i share parity, so no term cancels across
  // signs and |Delta(-1)| = u, Delta(1) = 1 come for free.
  LaurentPoly p;
  Z s = 0;
  p.add_term(1, 0);
  for (Z i = 1; i < k.u; ++i) {
    s += mod(floordiv(i * b, k.u), 2) == 0 ? 1 : -1;
    p.add_term(i % 2 == 0 ? 1 : -1, s);
  }
  return p.shifted(-two_bridge_signature(k) / 2);
}

}  // namespace ck
