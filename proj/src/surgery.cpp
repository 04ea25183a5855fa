// Magic-link surgery classification and 1-bridge braids: lens-space
// identification, pattern rewrapping, the classification table rows, Farey
// simple intervals, fillings, and braid presentations of constrained knots.
#include "ck/surgery.hpp"

#include <algorithm>

namespace ck {

namespace {

SurgerySlope make_slope(Z p, Z q) {
  if (p == 0 && q == 0) throw InvalidParameters("surgery slope 0/0");
  if (gcdz(p, q) != 1)
    throw InvalidParameters("surgery slope " + std::to_string(p) + "/" +
                            std::to_string(q) + " is not reduced");
  if (p < 0) {
    p = -p;
    q = -q;
  }
  if (p == 0) q = 1;
  return SurgerySlope{p, q};
}

}  // namespace

MagicSurgery magic_surgery(Z u, Z v, Z p1, Z q1, Z p2, Z q2) {
  TwoBridge pattern = two_bridge(u, v);
  return MagicSurgery{pattern.u, pattern.v, make_slope(p1, q1),
                      make_slope(p2, q2)};
}

LensSpace lens_from_magic(const MagicSurgery& m) {
  Z p = m.slope1.p * m.slope2.p - m.slope1.q * m.slope2.q;
  if (p == 0)
    throw NotLensSpace("p1 p2 = q1 q2: surgery gives S^1 x S^2, not a lens space");
  // p2 q2' - q2 p2' = -1 from the Bezout pair p2 x + q2 y = 1; a different
  // pair shifts q2', p2' by multiples of (q2, -p2) and q by p.
  ExtGcd e = ext_gcd(m.slope2.p, m.slope2.q);
  Z q2p = -e.x, p2p = e.y;
  Z q = m.slope1.p * p2p - m.slope1.q * q2p;
  if (p < 0) {
    p = -p;
    q = -q;
  }
  return LensSpace{p, mod(q, p)};
}

UvIndex uv_index(const std::string& name) {
  if (name == "1") return UvIndex::plus_one;
  if (name == "0") return UvIndex::zero;
  if (name == "-1") return UvIndex::minus_one;
  if (name == "-2") return UvIndex::minus_two;
  if (name == "*") return UvIndex::star;
  if (name == "#") return UvIndex::sharp;
  throw OutOfRange("unsupported shift index '" + name + "'");
}

TwoBridge uv_shift(Z u, Z v, UvIndex i) {
  bool trivial = u == 1 && v == 0;
  if (!trivial &&
      !(u > 0 && u % 2 == 1 && 0 < v && 2 * v < u && gcdz(u, v) == 1))
    throw InvalidParameters(
        "uv_shift needs the trivial pattern or 0 < 2v < u, u odd, coprime");
  switch (i) {
    case UvIndex::plus_one:
      return two_bridge(u + 2 * v, v);
    case UvIndex::zero:
      return two_bridge(u, v);
    case UvIndex::minus_one:
      return two_bridge(u - 2 * v, mod(v, u - 2 * v));
    case UvIndex::minus_two: {
      // The twice-shifted strand of the trefoil pattern closes to the
      // unknotted clasp with v = 1; every other pattern reduces mod U.
      if (u == 3 && v == 1) return two_bridge(1, 1);
      Z sign = u - 4 * v > 0 ? 1 : -1;
      Z U = sign * (u - 4 * v);
      return two_bridge(U, mod(sign * v, U));
    }
    case UvIndex::star:
      return two_bridge(3 * u - 4 * v, u - v);
    case UvIndex::sharp:
      return two_bridge(3 * u - 2 * v, 2 * u - v);
  }
  throw OutOfRange("unsupported shift index");
}

namespace {

struct RowHit {
  int row;  // 1..9 = rows (i), (ii), (ii'), (iii), (iv), (v), (vi), (vii), (viii)
  Z lm1;    // l - 1, raw; reduction happens in validate_constrained
  TwoBridge pat;
  Z q;  // raw q per the row's rule
};

// Rows that pin the knot completely, tried in table order for one assignment
// of the slopes to the (a, b) slots. The total order p1 p2 - q1 q2 is
// slot-symmetric and nonzero here.
std::optional<RowHit> resolved_row(Z u, Z v, const SurgerySlope& a,
                                   const SurgerySlope& b) {
  if (b.p == 1 && a.p > 0) {
    if (a.q * b.q < 0)  // (i)
      return RowHit{1, -a.q * b.q, uv_shift(u, v, UvIndex::zero), a.q};
    if (b.q > 1 && a.q > a.p) {  // (ii) / (ii')
      TwoBridge m1 = uv_shift(u, v, UvIndex::minus_one);
      TwoBridge m2 = uv_shift(u, v, UvIndex::minus_two);
      if (m1.u >= m2.u) return RowHit{2, a.p, m1, a.q};
      return RowHit{3, a.q * b.q - 2 * a.p, m2, a.q};
    }
    if (b.q < -1 && -a.q > a.p)  // (iii)
      return RowHit{4, a.q * b.q - 2 * a.p, uv_shift(u, v, UvIndex::star), a.q};
    if (b.q == 0)  // (iv): trivial second surgery, connected sum with a core
      return RowHit{5, 0, uv_shift(u, v, UvIndex::zero), a.q};
  }
  if (a.p > 1 && b.p > 0 && (a.q == 1 || a.q == -1)) {
    if (a.q * b.q < 0)  // (v)
      return RowHit{6, -a.q * b.q, uv_shift(u, v, UvIndex::zero), a.q * b.p};
    if (a.q == 1 && b.p > b.q && b.q > 0)  // (vi)
      return RowHit{7, a.p * b.p - 2 * b.q, uv_shift(u, v, UvIndex::plus_one),
                    b.p};
    if (a.q == -1 && b.p > -b.q && b.q < 0)  // (vii)
      return RowHit{8, a.p * b.p + 2 * b.q, uv_shift(u, v, UvIndex::sharp),
                    -b.p};
  }
  if (a.p == 0)  // (viii): 0-surgery undoes the pattern clasp
    return RowHit{9, 0, uv_shift(u, v, UvIndex::minus_one), b.p};
  return std::nullopt;
}

// Rows (ix)/(x): a +-1-surgery second slot leaves only candidate sets.
std::optional<int> candidate_row(const SurgerySlope& a, const SurgerySlope& b) {
  if (b.p == 1 && b.q == 1 && a.q > 0 && !(a.p == 1 && a.q == 1)) return 10;
  if (b.p == 1 && b.q == -1 && a.q < 0 && !(a.p == 1 && a.q == -1)) return 11;
  return std::nullopt;
}

// Mirroring the link mirrors the knot. Reported knots are normal-form
// tuples with `mirrored` marking that the actual knot is the tuple's mirror,
// so taking the mirror just flips the flag. Candidate q sets are negated
// mod p (a no-op on {+-q0^{+-1}} sets, kept for the record); l is unchanged.
MagicResult mirror_result(MagicResult r) {
  if (r.kind == MagicResult::Kind::Resolved) {
    r.knot->mirrored = !r.knot->mirrored;
  } else if (r.kind == MagicResult::Kind::Candidates) {
    std::set<Z> qs;
    for (Z q : r.q_candidates) qs.insert(mod(-q, r.p));
    r.q_candidates.assign(qs.begin(), qs.end());
  }
  return r;
}

}  // namespace

MagicResult magic_classify(const MagicSurgery& m) {
  // Patterns outside normal form funnel through the mirror link.
  if ((m.u > 1 && 2 * m.v > m.u) || (m.u == 1 && m.v == 1))
    return mirror_result(magic_classify(
        magic_surgery(m.u, m.u - m.v, m.slope1.p, -m.slope1.q, m.slope2.p,
                      -m.slope2.q)));

  MagicResult out;
  Z p = m.slope1.p * m.slope2.p - m.slope1.q * m.slope2.q;
  if (p == 0) return out;  // S^1 x S^2: no lens-space knot to report

  const SurgerySlope orders[2][2] = {{m.slope1, m.slope2},
                                     {m.slope2, m.slope1}};
  for (const auto& ord : orders) {
    const SurgerySlope& a = ord[0];
    const SurgerySlope& b = ord[1];
    if (auto hit = resolved_row(m.u, m.v, a, b)) {
      out.kind = MagicResult::Kind::Resolved;
      out.row = hit->row;
      out.knot = validate_constrained(p, hit->q, hit->lm1 + 1, hit->pat.u,
                                      hit->pat.v);
      out.p = out.knot->p;
      return out;
    }
    if (auto row = candidate_row(a, b)) {
      out.kind = MagicResult::Kind::Candidates;
      out.row = *row;
      out.p = p < 0 ? -p : p;
      Z q0 = mod(a.q, out.p);
      Z qi = mod_inverse(q0, out.p);
      std::set<Z> qs = {q0, mod(-q0, out.p), qi, mod(-qi, out.p)};
      out.q_candidates.assign(qs.begin(), qs.end());
      std::set<Z> ls = {mod(a.q, out.p) + 1, mod(-a.q, out.p) + 1};
      out.l_candidates.assign(ls.begin(), ls.end());
      return out;
    }
  }
  return out;
}

std::array<std::set<Z>, 5> magic_l_choices(Z p, Z q) {
  if (!(p > q && q > 0) || gcdz(p, q) != 1)
    throw InvalidParameters("magic_l_choices needs p > q > 0 coprime");
  std::array<std::set<Z>, 5> rows;
  for (Z n = 0; n * q < p; ++n) {
    rows[0].insert(mod(n * q, p));
    rows[0].insert(mod(-n * q, p));
  }
  Z r = p - q;
  for (Z n = 0; n * r < p; ++n) {
    rows[1].insert(mod(n * r, p));
    rows[1].insert(mod(-n * r, p));
  }
  Z cq = floordiv(p - 1, q) + 1;   // ceil(p/q)
  Z cr = floordiv(p - 1, r) + 1;   // ceil(p/(p-q))
  rows[2].insert(cq * q - p);
  rows[3].insert(mod(2 * p - cq * q, p));
  rows[4].insert(mod(2 * p - cr * r, p));
  return rows;
}

BridgeBraid braid_normalize(Z w, const Fraction& slope) {
  if (w < 1) throw InvalidParameters("winding number must be >= 1");
  Fraction s = frac(slope.num, slope.den);
  if (!(frac(0, 1) < s && s < frac(1, 1)))
    throw InvalidParameters("inverse slope must lie in (0, 1)");
  Z n = s.num, d = s.den;
  Z nw = mod(w * n, d);
  Z b = 0;
  for (Z i = 1; i < w; ++i)
    if (mod(i * n, d) < nw) ++b;
  Z t = floordiv(w * n, d);
  if (w > 1 && b == w - 1) {  // B(w, w-1, t) = B(w, 0, t+1)
    b = 0;
    t += 1;
  }
  return BridgeBraid{w, s, b, t};
}

LaurentPoly2 braid_alexander(const BridgeBraid& braid) {
  Z n = braid.slope.num, d = braid.slope.den;
  Z nw = mod(braid.w * n, d);
  LaurentPoly2 out;
  Z cum = 0;
  out.add_term(1, 0, 0);
  for (Z i = 1; i < braid.w; ++i) {
    if (mod(i * n, d) < nw) ++cum;
    out.add_term(1, i, cum);
  }
  return out;
}

namespace {

SimpleInterval classify_gap(Z w, const Fraction& lo, const Fraction& hi,
                            bool torus) {
  SimpleInterval s{lo, hi, BraidClass::Strict, 0, 0};
  if (torus) {
    s.cls = BraidClass::Torus;
  } else if (w % lo.den == 0) {
    s.cls = BraidClass::Cable;
    s.cable_d = lo.den;
    s.cable_side = -1;
  } else if (w % hi.den == 0) {
    s.cls = BraidClass::Cable;
    s.cable_d = hi.den;
    s.cable_side = 1;
  }
  return s;
}

}  // namespace

SimpleInterval simple_interval(const BridgeBraid& braid) {
  Z w = braid.w;
  // A single strand is the core: a torus braid with every filling simple.
  if (w == 1) return SimpleInterval{frac(0, 1), frac(1, 1), BraidClass::Torus, 0, 0};
  if (braid.slope.den < w)
    throw InvalidParameters(
        "slope is a Farey vertex below the winding number: not a knot braid");
  auto F = farey_sequence(w - 1);
  // den >= w > w-1, so the slope is never an F_{w-1} term and both
  // neighbors exist inside (0, 1).
  auto it = std::upper_bound(F.begin(), F.end(), braid.slope);
  return classify_gap(w, *(it - 1), *it, braid.slope.den == w);
}

SimpleInterval simple_interval_below(Z w, const Fraction& limit) {
  if (w < 1) throw InvalidParameters("winding number must be >= 1");
  if (w == 1) return SimpleInterval{frac(0, 1), frac(1, 1), BraidClass::Torus, 0, 0};
  Fraction lim = frac(limit.num, limit.den);
  if (!(frac(0, 1) < lim) || frac(1, 1) < lim)
    throw InvalidParameters("slope limit must lie in (0, 1]");
  auto F = farey_sequence(w - 1);
  // The braid slope is lim minus an infinitesimal: its gap runs from the
  // last term strictly below lim to the first term at or above it.
  auto it = std::lower_bound(F.begin(), F.end(), lim);
  return classify_gap(w, *(it - 1), *it, false);
}

std::optional<Fraction> torus_representative(Z w, const Fraction& lo,
                                             const Fraction& hi) {
  if (w < 1) throw InvalidParameters("winding number must be >= 1");
  for (Z c = floordiv(lo.num * w, lo.den) + 1; c * hi.den < hi.num * w; ++c)
    if (gcdz(c, w) == 1) return frac(c, w);
  return std::nullopt;
}

std::optional<SimpleKnot> braid_fill(const BridgeBraid& braid, Z p, Z q) {
  if (!(0 < q && q < p) || gcdz(p, q) != 1)
    throw InvalidParameters("filling needs 0 < q < p with gcd(p, q) = 1");
  SimpleInterval s = simple_interval(braid);
  Fraction f = frac(q, p);
  if (f < s.f_minus || s.f_plus < f) return std::nullopt;
  return simple_knot(p, q, mod(braid.w * q, p));
}

BraidSlope constrained_to_braid(const Constrained& k, Z lift) {
  if (!(k.u > 1 && k.v == 1))
    throw NotOneBridgeEligible(
        "braid form needs pattern v = 1 (v = u - 1 reaches it by mirroring)");
  if (k.p <= 1)
    throw NotOneBridgeEligible("braid form needs a nontrivial lens space");
  if (lift < 0) throw InvalidParameters("lift index must be >= 0");
  Z qp = inverse_q(k);
  Z lambda = (k.q * qp - 1) / k.p;
  Z eps = k.l + k.q > k.p ? 1 : 0;
  Z n0 = (k.u - 1) / 2 - eps + lift;
  Z w = k.p * (k.u - 1 - eps + lift) + k.q - k.l + 1;
  return BraidSlope{w,    frac(lambda + n0 * qp, k.q + n0 * k.p),
                    true, lift,
                    n0,   eps};
}

BraidSlope constrained_to_braid(const Constrained& k) {
  // u >= 3 in every eligible case, so the smallest straightenable arc index
  // is already 0.
  return constrained_to_braid(k, 0);
}

}  // namespace ck
