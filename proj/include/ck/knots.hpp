#pragma once
// Constrained knots C(p, q, l, u, v) in lens spaces: parameter normal form,
// mirrors, conversions to (1,1)-decompositions and simple knots, spin-c
// block sizes, and the exact equivalence decision.

#include <optional>
#include <string>
#include <vector>

#include "ck/arith.hpp"
#include "ck/errors.hpp"
#include "ck/twobridge.hpp"

namespace ck {

// Normal form: p >= 1, q in [0, p) coprime to p (q = 0 only when p = 1),
// l in [1, p], u odd positive coprime to v, 0 <= 2v < u (v = 0 only when
// u = 1). `mirrored` records that normalization replaced the input knot by
// its mirror; it is bookkeeping, not part of the knot's identity.
struct Constrained {
  Z p = 1, q = 0, l = 1, u = 1, v = 0;
  bool mirrored = false;

  friend bool operator==(const Constrained& a, const Constrained& b) {
    return a.p == b.p && a.q == b.q && a.l == b.l && a.u == b.u && a.v == b.v;
  }
};

// Reduce q, l, v into range (sign of p folds into q), check parities and
// gcds, then mirror into 0 <= 2v < u if needed.
Constrained validate_constrained(Z p, Z q, Z l, Z u, Z v);

// C(p, -q, l, u, -v), ranges reduced; not re-normalized, so the result of
// mirroring a normal-form knot usually has 2v > u.
Constrained mirror_constrained(const Constrained& k);

// q' with q q' = 1 (mod p); 0 when p = 1.
Z inverse_q(const Constrained& k);

// k in [1, p] with k - 1 = (l - 1) q' (mod p).
Z k_of(const Constrained& k);

// k' = k - 2 when v is odd, else k; the homology relation is p[a] + k'[m].
Z k_prime_of(const Constrained& k);

// Rank of the knot Floer homology: pu - 2v(l - 1).
Z total_rank(const Constrained& k);

// The two-bridge pattern b(u, v).
TwoBridge pattern_of(const Constrained& k);

// Doubly-pointed genus-1 Heegaard diagram parameters W(p, q, r, s) with a
// chirality sign: p intersection points, q rainbows, r middle stripes,
// s twist, 2q + r <= p, 0 <= s < p.
struct OneOne {
  Z p = 1, q = 0, r = 0, s = 0;
  int chirality = 1;  // +1 for W+, -1 for W-

  bool operator==(const OneOne&) const = default;
};

OneOne one_one(Z p, Z q, Z r, Z s, int chirality);

// W(pu - 2v(l-1), v, uk - 2v n1, uq' - 2v n2) with positive chirality;
// needs normal form (0 <= 2v < u).
OneOne to_one_one(const Constrained& k);

// mirror = W(p, q, p-2q-r, p-s+2q) with the same chirality (mirror of the
// alternative diagram); alt = W(p, q, p-2q-r, s-2q) with chirality flipped
// (same knot, other diagram). Twist indices are reduced mod p.
struct OneOneRelations {
  OneOne mirror, alt;
};
OneOneRelations w_relations(const OneOne& w);

// Simple knot S(p, q, k): p >= 1, gcd(p, q) = 1, q and k taken mod p.
struct SimpleKnot {
  Z p = 1, q = 0, k = 0;
  bool operator==(const SimpleKnot&) const = default;
};

SimpleKnot simple_knot(Z p, Z q, Z k);

// S(p, q', k) for u = 1 knots: k - 1 = (l-1)q' when v = 0, k + 1 = (l-1)q'
// when v = 1.
SimpleKnot simple_knot_of(const Constrained& k);

// Orbit test: same p, ambient q2 in {q1, q1'}, and (q2, k2) reachable from
// (q1, k1) by k -> -k and (q, k) -> (q', kq'). Everything in S^3 is the
// unknot.
bool simple_equivalent(const SimpleKnot& a, const SimpleKnot& b);

enum class SpecialKind { Unknot, Core, Composite, TwoBridgeInS3, Generic };

struct Special {
  SpecialKind kind = SpecialKind::Generic;
  std::optional<TwoBridge> factor;   // Composite and TwoBridgeInS3
  std::optional<Constrained> core;   // Composite
};

// Unknot and core detection (u = 1), connected sums (l = 1, p > 1), and
// honest two-bridge knots (p = 1).
Special classify_special(const Constrained& k);

// The p region sizes in alpha-traversal order D_1, D_{1+q}, D_{1+2q}, ...;
// size u - 2v for region index in [1, l-1], size u otherwise. Partial sums
// are the spin-c block boundaries.
std::vector<Z> spinc_blocks(const Constrained& k);

// (u, v) in {(1,0), (1,1)} or v = +-1 (mod u).
bool is_lspace_knot(const Constrained& k);

enum class Verdict { Equivalent, NotEquivalent, Indeterminate };

struct EquivalenceResult {
  Verdict verdict = Verdict::Indeterminate;
  std::string reason;
};

// Exact decision inside the classification window, special-case reasoning
// for simple and composite shapes, rank comparison otherwise.
// Inputs must be in normal form; throws AmbientMismatch when the two lens
// spaces differ even as unoriented manifolds.
EquivalenceResult decide_equivalence(const Constrained& a,
                                     const Constrained& b);

}  // namespace ck
