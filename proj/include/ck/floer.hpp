#pragma once
// Knot Floer homology data of constrained knots: the homology presentation of
// the complement, the Alexander grading walk over middle points, the Euler
// characteristic over the group ring, dimensions via thinness, identification
// of homology between knots, and width/genus/fibredness.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ck/arith.hpp"
#include "ck/errors.hpp"
#include "ck/knots.hpp"
#include "ck/poly.hpp"
#include "ck/twobridge.hpp"

namespace ck {

// H_1 of the complement: Z<[a],[m]> / (p[a] + k'[m]) = Z<T> + Z/d<R>.
// t_*, r_* are the coordinates of [a] and [m]; t_m = p/d > 0 always, which
// fixes the sign of T.
struct Homology {
  Z p = 1, k = 1, k_prime = 1, d = 1;
  Z t_a = 0, t_m = 1;  // free coordinates of [a], [m]
  Z r_a = 0, r_m = 0;  // torsion coordinates in [0, d)

  bool operator==(const Homology&) const = default;
};

// Element of (1/2) H_1 in doubled coordinates: two_t is even exactly for
// integral free parts, two_r lives in [0, 2d).
struct HalfGrading {
  Z two_t = 0;
  Z two_r = 0;
  auto operator<=>(const HalfGrading&) const = default;
};

using GroupRing = std::map<HalfGrading, Z>;

Homology homology_presentation(const Constrained& k);

// Grading steps gr(x_mid^{j+1}) - gr(x_mid^j) as ([a],[m]) coefficient
// pairs, indexed j = 0..p-1 cyclically; their sum is exactly (p, k').
std::vector<std::pair<Z, Z>> walk_differences(const Constrained& k);

// gr(x_mid^j) for j = 1..p in the canonical representative (the shift that
// makes the full generator-grading multiset negation-invariant).
std::vector<HalfGrading> grading_walk(const Constrained& k);

// A(K, s_j) = gr(x_mid^j); same list as grading_walk.
std::vector<HalfGrading> middle_gradings(const Constrained& k);

struct ClassEuler {
  Z j = 1;              // spin-c class index in [1, p]
  bool family_one = true;  // true for j in [l, p] (pattern b(u,v)), false
                           // for j in [1, l-1] (derived pattern)
  HalfGrading middle;
  LaurentPoly local;    // symmetric local polynomial, value 1 at t = 1
};

struct EulerData {
  Homology h1;
  std::vector<ClassEuler> classes;
  GroupRing chi;  // sum over classes of local([m]) placed at the middle
};

EulerData hfk_euler(const Constrained& k);

struct Dimensions {
  std::vector<std::map<HalfGrading, Z>> per_class;  // index j-1
  std::map<HalfGrading, Z> total;
  Z total_dimension = 0;  // equals pu - 2v(l-1)
};

// Thinness: the dimension at each grading is the absolute value of the local
// coefficient; no cancellation happens inside a class.
Dimensions hfk_dimensions(const Constrained& k);

// Change of basis T -> T + xR, R -> yR (gcd(y, d) = 1) carrying the image of
// [m] in `a` to the image of [m] in `b`; eps stays +1 because both free
// coordinates of [m] equal p/d > 0.
struct Identify {
  int eps = 1;
  Z x = 0, y = 1;
};

// Throws NotIdentifiable when p or d differ or no automorphism works.
Identify identify_h1(const Homology& a, const Homology& b);

HalfGrading apply_identify(const Identify& id, Z d, const HalfGrading& g);

struct WidthGenus {
  Z width = 0;            // max - min of the free coordinate gr_0
  Z thurston_norm = 0;    // width - p/d
  Z boundary_components = 1;  // gcd(d, p/d)
  Z genus = 0;            // 1 + (thurston_norm - boundary_components)/2
  Z top_rank = 0;         // total dimension at the extremal gr_0
  bool fibred = false;    // top_rank == 1
};

// Carries the raw numbers when thurston_norm < boundary_components, where
// the genus formula loses meaning (unknots and cores).
struct DegenerateNorm : std::runtime_error {
  Z width, thurston_norm, boundary_components, top_rank;
  bool fibred;
  DegenerateNorm(Z w, Z norm, Z n, Z rank, bool fib)
      : std::runtime_error("thurston norm below boundary-component count"),
        width(w),
        thurston_norm(norm),
        boundary_components(n),
        top_rank(rank),
        fibred(fib) {}
};

WidthGenus width_genus_fibred(const Constrained& k);

// Splits chi by cosets of the cyclic subgroup generated by [m]; the value at
// a coset is a Laurent polynomial in M = [m]. Keys are the coset
// representatives with free part reduced into [0, 2 t_m).
std::map<HalfGrading, LaurentPoly> chi_cosets(const GroupRing& chi,
                                              const Homology& h);

// For d = 1 the torsion part vanishes and chi is a Laurent polynomial in
// X = T^{1/2} with exponents two_t.
LaurentPoly chi_free_poly(const EulerData& e);

}  // namespace ck
