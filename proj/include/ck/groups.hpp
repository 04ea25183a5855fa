#pragma once
// Free-group words over s and t, the standard relator of a constrained-knot
// group, continued-fraction rewriting maps with the isomorphism verification
// they support, and restricted Fox calculus.

#include <string>
#include <utility>
#include <vector>

#include "ck/arith.hpp"
#include "ck/errors.hpp"
#include "ck/knots.hpp"
#include "ck/poly.hpp"

namespace ck {

// Letters: +1 = s, -1 = s^-1, +2 = t, -2 = t^-1. Always freely reduced.
struct Word {
  std::vector<int> a;
  bool operator==(const Word&) const = default;
};

Word word(const std::string& letters);  // string over {s, S, t, T}
std::string to_string(const Word& w);
Word concat(const Word& x, const Word& y);
Word inverse(const Word& x);
Word power(const Word& x, Z n);
std::pair<Z, Z> exponent_sums(const Word& w);  // (s sum, t sum)
Word substitute(const Word& w, const Word& img_s, const Word& img_t);
Word cyclic_reduce(const Word& w);
bool cyclic_equal(const Word& x, const Word& y);

// theta_i(p, q, l) for i = 0..p-1: 1 iff iq mod p lies in [0, k) where
// k - 1 = (l - 1) q (mod p), k in (0, p].
std::vector<int> theta_vector(Z p, Z q, Z l);

// s t^{theta_l} s ... s t^{theta_{p-1}} s  (just s when l = p).
Word s_star(Z p, Z q, Z l);

// t^{theta_0} s t^{theta_1} s ... s t^{theta_{l-1}}  (just t when l = 1).
Word t_star(Z p, Z q, Z l);

// Relator of the knot-group presentation <s, t | w>: blocks s_*^{eps_i} at
// odd i and t-blocks at even i, where the t-block is the bare letter when
// eps_{i-1} = -eps_{i+1} and t_*^{eps_i} otherwise. Input must be in normal
// form; the structure words use q' = q^{-1} mod p.
Word standard_relation(const Constrained& k);

// Substitution maps: F1 t->s^n t, F2 s->t^n s, G1 t->t s^n, G2 s->s t^n,
// H0 swaps s,t; H1 s->t, t->s^-1; H2 s->s^-1, t->t^-1.
enum class MapKind { F1, F2, G1, G2, H0, H1, H2 };

struct MapPrimitive {
  MapKind kind;
  Z n = 1;
};

// Composition; the last element applies first.
using RewriteMap = std::vector<MapPrimitive>;

Word apply_primitive(const MapPrimitive& m, const Word& w);
Word apply_map(const RewriteMap& m, const Word& w);

// For q/p = [a_0; a_1, ..., a_m]: f_m^{-a_m+1} o ... o f_1^{-a_1} o f_0^{-a_0}
// with f_odd = F1, f_even = F2; rewrite_F prepends F1^1 o F2^{-1}. The g maps
// swap the roles of G1 (odd) and G2 (even).
RewriteMap rewrite_f(const Fraction& x);
RewriteMap rewrite_F(const Fraction& x);
RewriteMap rewrite_g(const Fraction& x);
RewriteMap rewrite_G(const Fraction& x);

// Column operations induced on the intersection matrix [[a,b],[c,d]]:
// F1^n adds n times column 2 to column 1, F2^n the reverse. Other map kinds
// are not column operations and throw.
struct Mat2 {
  Z a = 1, b = 0, c = 0, d = 1;
  bool operator==(const Mat2&) const = default;
};
Mat2 apply_columns(const RewriteMap& m, Mat2 mat);

// Checks, for l in {2, p}, that the rewriting map carries the standard
// relator of C(p, q', l, u, v) to the one of C(p, q, l, u, v) up to circular
// permutation and inversion of both generators (v odd), together with the
// supporting word identities and the column-operation identity.
bool verify_isomorphism(Z p, Z q, Z l, Z u, Z v);

// phi(d relator / d t) * (t - 1) / (t^alpha - 1) for the abelianization
// s -> t^alpha, t -> t^beta (swaps to the s-derivative when alpha = 0).
// Requires gcd(alpha, beta) = 1 and relator in the kernel.
LaurentPoly fox_alexander(const Word& relator, Z alpha, Z beta);

// phi(d relator / d t) / (s - 1) for s -> s, t -> t; relator must have zero
// exponent sums.
LaurentPoly2 fox_alexander_st(const Word& relator);

// One-variable Alexander polynomial of the knot via the standard relator and
// the homology coordinates; TorsionTarget unless H_1 of the complement is
// torsion-free.
LaurentPoly knot_alexander(const Constrained& k);

}  // namespace ck
