// Constrained knot parameterization and equivalence; see ck/knots.hpp.

#include "ck/knots.hpp"

#include <algorithm>
#include <array>

namespace ck {

static std::string tuple_str(Z p, Z q, Z l, Z u, Z v) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," +
         std::to_string(l) + "," + std::to_string(u) + "," +
         std::to_string(v) + ")";
}

Constrained validate_constrained(Z p, Z q, Z l, Z u, Z v) {
  if (p == 0) throw InvalidParameters("ambient order p must be nonzero");
  if (p < 0) {  // C(p,q,l,u,v) = C(-p,-q,l,u,v)
    p = -p;
    q = -q;
  }
  q = mod(q, p);
  if (gcdz(p, q) != 1)
    throw InvalidParameters("p, q not coprime in " + tuple_str(p, q, l, u, v));
  l = mod(l - 1, p) + 1;
  if (u <= 0 || u % 2 == 0)
    throw InvalidParameters("u must be odd positive in " +
                            tuple_str(p, q, l, u, v));
  if (u == 1) {
    if (v != 0 && v != 1)
      throw InvalidParameters("v must be 0 or 1 when u = 1 in " +
                              tuple_str(p, q, l, u, v));
  } else {
    v = mod(v, u);
    if (gcdz(u, v) != 1)
      throw InvalidParameters("u, v not coprime in " +
                              tuple_str(p, q, l, u, v));
  }
  Constrained k{p, q, l, u, v};
  if (2 * v > u) {  // mirror into 0 <= 2v < u (u odd, so 2v = u cannot occur)
    k = mirror_constrained(k);
    k.mirrored = true;
  }
  return k;
}

Constrained mirror_constrained(const Constrained& k) {
  Constrained m = k;
  m.q = mod(-k.q, k.p);
  m.v = k.u == 1 ? 1 - k.v : k.u - k.v;
  m.mirrored = false;
  return m;
}

Z inverse_q(const Constrained& k) { return mod_inverse(k.q, k.p); }

Z k_of(const Constrained& k) {
  return mod((k.l - 1) * inverse_q(k), k.p) + 1;
}

Z k_prime_of(const Constrained& k) {
  return k.v % 2 != 0 ? k_of(k) - 2 : k_of(k);
}

Z total_rank(const Constrained& k) {
  return k.p * k.u - 2 * k.v * (k.l - 1);
}

TwoBridge pattern_of(const Constrained& k) { return two_bridge(k.u, k.v); }

OneOne one_one(Z p, Z q, Z r, Z s, int chirality) {
  if (p < 1 || q < 0 || r < 0 || s < 0 || 2 * q + r > p || s >= p ||
      (chirality != 1 && chirality != -1))
    throw InvalidParameters("doubly-pointed diagram parameters out of range");
  return {p, q, r, s, chirality};
}

OneOne to_one_one(const Constrained& c) {
  if (2 * c.v > c.u)
    throw InvalidParameters("one-bridge conversion needs normal form");
  Z qp = inverse_q(c), k = k_of(c);
  Z n1 = 0, n2 = 0;
  for (Z i = 0; i < c.l; ++i) {
    Z qi = mod(i * qp, c.p);
    if (qi <= k - 1) ++n1;
    if (1 <= qi && qi <= qp - 1) ++n2;
  }
  Z pw = total_rank(c);
  return one_one(pw, c.v, c.u * k - 2 * c.v * n1,
                 mod(c.u * qp - 2 * c.v * n2, pw), 1);
}

OneOneRelations w_relations(const OneOne& w) {
  OneOne mirror{w.p, w.q, w.p - 2 * w.q - w.r, mod(w.p - w.s + 2 * w.q, w.p),
                w.chirality};
  OneOne alt{w.p, w.q, w.p - 2 * w.q - w.r, mod(w.s - 2 * w.q, w.p),
             -w.chirality};
  return {mirror, alt};
}

SimpleKnot simple_knot(Z p, Z q, Z k) {
  if (p < 1) throw InvalidParameters("simple knot needs p >= 1");
  q = mod(q, p);
  if (gcdz(p, q) != 1)
    throw InvalidParameters("simple knot p, q not coprime");
  return {p, q, mod(k, p)};
}

SimpleKnot simple_knot_of(const Constrained& c) {
  if (c.u != 1)
    throw InvalidParameters("simple presentation needs u = 1, got u = " +
                            std::to_string(c.u));
  Z qp = inverse_q(c);
  Z base = mod((c.l - 1) * qp, c.p);
  return simple_knot(c.p, qp, c.v == 0 ? base + 1 : base - 1);
}

bool simple_equivalent(const SimpleKnot& a, const SimpleKnot& b) {
  if (a.p != b.p) return false;
  if (a.p == 1) return true;
  Z p = a.p, qp = mod_inverse(a.q, p);
  std::array<SimpleKnot, 4> orbit = {
      SimpleKnot{p, a.q, a.k}, SimpleKnot{p, a.q, mod(-a.k, p)},
      SimpleKnot{p, qp, mod(a.k * qp, p)},
      SimpleKnot{p, qp, mod(-a.k * qp, p)}};
  return std::find(orbit.begin(), orbit.end(), b) != orbit.end();
}

Special classify_special(const Constrained& c) {
  if (c.u == 1) {
    Z k = k_of(c), qp = inverse_q(c);
    if (mod(k, c.p) == 0) return {SpecialKind::Unknot, {}, {}};
    if (mod(k - 1, c.p) == 0 || mod(k + 1, c.p) == 0 ||
        mod(k - qp, c.p) == 0 || mod(k + qp, c.p) == 0)
      return {SpecialKind::Core, {}, {}};
  }
  if (c.l == 1 && c.p > 1)
    return {SpecialKind::Composite, pattern_of(c),
            Constrained{c.p, c.q, 1, 1, 0}};
  if (c.p == 1) return {SpecialKind::TwoBridgeInS3, pattern_of(c), {}};
  return {SpecialKind::Generic, {}, {}};
}

std::vector<Z> spinc_blocks(const Constrained& c) {
  std::vector<Z> sizes;
  sizes.reserve(static_cast<size_t>(c.p));
  for (Z i = 0; i < c.p; ++i) {
    Z region = mod(i * c.q, c.p) + 1;
    sizes.push_back(region <= c.l - 1 ? c.u - 2 * c.v : c.u);
  }
  return sizes;
}

bool is_lspace_knot(const Constrained& c) {
  if (c.u == 1) return true;
  return c.v == 1 || c.v == c.u - 1;
}

// The ambient lens space of C(p,q,...) is L(p,q'); two of them agree as
// unoriented manifolds iff the q classes match up to sign and inverse.
static bool same_unoriented_lens(const Constrained& a, const Constrained& b) {
  if (a.p != b.p) return false;
  if (a.p == 1) return true;
  Z p = a.p, qi = mod_inverse(a.q, p);
  return b.q == a.q || b.q == qi || b.q == mod(-a.q, p) ||
         b.q == mod(-qi, p);
}

static bool in_classification_window(const Constrained& k) {
  return k.p > 1 && k.l >= 2 && k.u > 2 * k.v && k.v > 0;
}

EquivalenceResult decide_equivalence(const Constrained& a,
                                     const Constrained& b) {
  if (!same_unoriented_lens(a, b))
    throw AmbientMismatch("knots live in different lens spaces");
  if (a == b) return {Verdict::Equivalent, "identical normal forms"};
  if (a.u == 1 && b.u == 1) {
    bool eq = simple_equivalent(simple_knot_of(a), simple_knot_of(b));
    return {eq ? Verdict::Equivalent : Verdict::NotEquivalent,
            "simple knot orbit comparison"};
  }
  if (a.l == 1 && b.l == 1) {
    if (!two_bridge_equivalent(pattern_of(a), pattern_of(b)))
      return {Verdict::NotEquivalent, "two-bridge summands differ"};
    if (a.p == 1 ||
        simple_equivalent(simple_knot_of({a.p, a.q, 1, 1, 0}),
                          simple_knot_of({b.p, b.q, 1, 1, 0})))
      return {Verdict::Equivalent, "summand-wise comparison"};
    return {Verdict::Indeterminate,
            "equal two-bridge summands, core summands not identified"};
  }
  if (in_classification_window(a) && in_classification_window(b)) {
    bool eq = mod(a.q * b.q, a.p) == 1 && a.l == b.l &&
              (a.l == 2 || a.l == a.p) && a.u == b.u && a.v == b.v;
    return {eq ? Verdict::Equivalent : Verdict::NotEquivalent,
            "classification of distinct parameter tuples"};
  }
  auto ra = spinc_blocks(a), rb = spinc_blocks(b);
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  if (ra != rb)
    return {Verdict::NotEquivalent, "per-class homology ranks differ"};
  return {Verdict::Indeterminate,
          "mixed parameter shapes with matching rank data"};
}

}  // namespace ck
