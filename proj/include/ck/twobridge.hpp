#pragma once
// Two-bridge knots b(u, v): parameter normal form, equivalence, mirror,
// signature, and the Alexander polynomial in its symmetric representative.

#include <vector>

#include "ck/arith.hpp"
#include "ck/errors.hpp"
#include "ck/poly.hpp"

namespace ck {

// u odd positive, 0 <= v < u, gcd(u, v) = 1. b(1, 0) and b(1, 1) are the
// unknot; both labels are kept because they pair with opposite chiralities
// upstream, and 1 reduces to 0 only through an explicit mirror.
struct TwoBridge {
  Z u = 1, v = 0;
  bool operator==(const TwoBridge&) const = default;
};

// Validate and reduce v mod u (v mod 1 keeps the {0, 1} label for u = 1).
TwoBridge two_bridge(Z u, Z v);

// b(u, u - v); for the unknot the 0/1 label flips.
TwoBridge two_bridge_mirror(const TwoBridge& k);

// b(u - 2v, v mod (u - 2v)); defined for u > 2v >= 0.
TwoBridge derived_two_bridge(const TwoBridge& k);

// Same knot type: equal u and v2 = v1^{+-1} (mod u).
bool two_bridge_equivalent(const TwoBridge& a, const TwoBridge& b);

// Signature of b(u, v) (sign convention: +2 for b(3, 1)).
Z two_bridge_signature(const TwoBridge& k);

// Symmetric Alexander polynomial with Delta(1) = 1 and |Delta(-1)| = u.
LaurentPoly alexander_two_bridge(const TwoBridge& k);

// eps_i = (-1)^floor(iv/u) for i = 1..n (raw v, not its odd representative).
std::vector<int> epsilon_sequence(Z u, Z v, Z n);

}  // namespace ck
