#pragma once
// Dehn-surgery constructions of constrained knots: the table-driven
// classification of knots produced by surgeries on magic links, and 1-bridge
// braids in the solid torus with their Farey simple intervals and fillings.

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ck/arith.hpp"
#include "ck/errors.hpp"
#include "ck/knots.hpp"
#include "ck/poly.hpp"
#include "ck/twobridge.hpp"

namespace ck {

// Surgery coefficient p/q on a link component: p >= 0, gcd(p, q) = 1.
// 1/0 is the meridian (trivial filling); 0/q is stored as 0/1.
struct SurgerySlope {
  Z p = 1, q = 0;
  bool operator==(const SurgerySlope&) const = default;
};

// The magic link is the two-bridge link b(u, v) pattern together with two
// unknotted circles; slope1/slope2 are the surgery coefficients on those
// circles, and the knot of interest is the leftover b(u, v) component.
// Pattern range: u odd positive, gcd(u, v) = 1, 0 < v < u for u > 1 and
// v in {0, 1} for u = 1.
struct MagicSurgery {
  Z u = 1, v = 0;
  SurgerySlope slope1, slope2;
};

MagicSurgery magic_surgery(Z u, Z v, Z p1, Z q1, Z p2, Z q2);

struct LensSpace {
  Z p = 1, q = 0;
  bool operator==(const LensSpace&) const = default;
};

// L(p1 p2 - q1 q2, p1 p2' - q1 q2') where p2 q2' - q2 p2' = -1, normalized
// to p > 0 and q in [0, p). Different Bezout choices shift q by p, so the
// result is well defined. Throws NotLensSpace when p1 p2 = q1 q2.
LensSpace lens_from_magic(const MagicSurgery& m);

// Strand index for the pattern re-identification (U(u,v,i), V(u,v,i)):
// wrapping a two-bridge diagram back up along the strand a_i, a_* or a_#.
enum class UvIndex { plus_one, zero, minus_one, minus_two, star, sharp };

// Parse "1", "0", "-1", "-2", "*", "#"; anything else throws OutOfRange.
UvIndex uv_index(const std::string& name);

// Closed forms for the rewrapped pattern. Requires (u, v) = (1, 0) or
// 0 < 2v < u with u odd, gcd(u, v) = 1. V is reduced into [0, U); the single
// exception (3, 1, -2) -> (1, 1) follows the worked identification of that
// diagram. Results are verbatim, not mirror-normalized (sharp always gives
// 2V > U).
TwoBridge uv_shift(Z u, Z v, UvIndex i);

// Outcome of the table classification. Rows (i)-(viii) pin the knot
// completely; rows (ix)-(x) only bound l - 1 = +-q1 and q in {+-q0^{+-1}},
// so they report candidate sets. Unknown means no table row covers the
// surgery (the classification is unresolved there).
struct MagicResult {
  enum class Kind { Resolved, Candidates, Unknown };
  Kind kind = Kind::Unknown;
  int row = 0;                      // 1..11 in table order, 0 when unknown
  std::optional<Constrained> knot;  // Resolved
  Z p = 0;                          // lens-space order (Resolved/Candidates)
  std::vector<Z> q_candidates;      // Candidates: sorted, values in [0, p)
  std::vector<Z> l_candidates;      // Candidates: sorted, values in [1, p]
};

// Classify the leftover component of a surgered magic link as a constrained
// knot. Patterns with 2v > u funnel through the mirror link with negated
// coefficients; the two surgery slots are interchangeable, so both orders
// are tried against the table (given order first).
MagicResult magic_classify(const MagicSurgery& m);

// The five rows of admissible l - 1 values for lens parameters p > q > 0:
// {+-nq : nq in [0,p)}, {+-n(p-q) : n(p-q) in [0,p)}, ceil(p/q)q - p,
// 2p - ceil(p/q)q, 2p - ceil(p/(p-q))(p-q); all reduced into [0, p-1].
std::array<std::set<Z>, 5> magic_l_choices(Z p, Z q);

// 1-bridge braid B(w, b, t) in the solid torus, recorded by winding number
// and exact inverse slope in (0, 1); b and t are derived, with the aliasing
// rule B(w, w-1, t) = B(w, 0, t+1) applied so that b lies in [0, w-2].
struct BridgeBraid {
  Z w = 1;
  Fraction slope;
  Z b = 0, t = 0;
  bool operator==(const BridgeBraid&) const = default;
};

// b = #{i in [1, w-1] : n_i < n_w} for n_i = ni mod d, t = floor(w * slope).
BridgeBraid braid_normalize(Z w, const Fraction& slope);

// Two-variable Alexander polynomial sum_{i=0}^{w-1} s^i t^{theta_1+...+theta_i}
// with theta_j = 1 iff n_j < n_w.
LaurentPoly2 braid_alexander(const BridgeBraid& braid);

enum class BraidClass { Torus, Cable, Strict };

// Simple interval [f-, f+] of consecutive Farey F_{w-1} terms around the
// inverse slope. Torus: slope denominator equals w. Cable: an endpoint
// denominator divides w (cable_side -1 for f-, +1 for f+; f- preferred).
struct SimpleInterval {
  Fraction f_minus, f_plus;
  BraidClass cls = BraidClass::Strict;
  Z cable_d = 0;
  int cable_side = 0;
};

// Throws InvalidParameters when the slope is itself an F_{w-1} vertex
// (denominator < w): the open-interval condition defining the simple
// interval fails there.
SimpleInterval simple_interval(const BridgeBraid& braid);

// Simple interval of a braid whose slope is `limit` minus an infinitesimal:
// f- is the last F_{w-1} term strictly below limit, f+ the first at or above.
SimpleInterval simple_interval_below(Z w, const Fraction& limit);

// Denominator-w fraction strictly inside (lo, hi), if any; every braid with
// slope in that open Farey gap is isotopic to the torus braid it names.
std::optional<Fraction> torus_representative(Z w, const Fraction& lo,
                                             const Fraction& hi);

// Dehn filling along p/q: the braid closes to a knot in L(p, q), simple
// exactly when q/p lies in the closed simple interval, in which case it is
// S(p, q, wq). Returns nullopt (not simple) otherwise.
std::optional<SimpleKnot> braid_fill(const BridgeBraid& braid, Z p, Z q);

// Straightened-arc presentation of a v = 1 constrained knot as a 1-bridge
// braid: winding number and inverse slope. The slope is a left limit: the
// braid slope is the recorded fraction minus an infinitesimal.
struct BraidSlope {
  Z w = 0;
  Fraction slope;
  bool left_limit = true;
  Z lift = 0;     // chosen arc index i >= 0
  Z n0 = 0;       // (u-1)/2 - epsilon + i
  Z epsilon = 0;  // 1 iff l + q > p
};

// w = p(u - 1 - eps + i) + q - l + 1, slope = (lambda + n0 q') / (q + n0 p)
// with lambda = (qq' - 1)/p. Needs normal form with u > 1, v = 1 and p > 1
// (v = u - 1 inputs reach v = 1 through mirror normalization); everything
// else throws NotOneBridgeEligible. The default lift is the smallest i >= 0
// with n0 >= 0.
BraidSlope constrained_to_braid(const Constrained& k);
BraidSlope constrained_to_braid(const Constrained& k, Z lift);

}  // namespace ck
