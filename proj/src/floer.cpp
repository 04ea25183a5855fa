// Homology presentation, grading walk, canonical representative, Euler
// characteristic over the group ring, and the width/genus/fibredness reads.

#include "ck/floer.hpp"

#include <algorithm>
#include <cstdlib>

namespace ck {

Homology homology_presentation(const Constrained& k) {
  Homology h;
  h.p = k.p;
  h.k = k_of(k);
  h.k_prime = k_prime_of(k);
  h.d = h.k_prime == 0 ? h.p : gcdz(h.p, std::llabs(h.k_prime));
  // Smith coordinates: the free part of x[a] + y[m] is (-k'x + py)/d and the
  // torsion part is (alpha x + beta y) mod d with alpha p + beta k' = d.
  ExtGcd e = ext_gcd(h.p, h.k_prime);
  h.t_a = -h.k_prime / h.d;
  h.t_m = h.p / h.d;
  h.r_a = mod(e.x, h.d);
  h.r_m = mod(e.y, h.d);
  return h;
}

std::vector<std::pair<Z, Z>> walk_differences(const Constrained& k) {
  const Z p = k.p, l = k.l;
  const Z qp = inverse_q(k);
  const Z kk = k_of(k);
  const bool v_even = k.v % 2 == 0;
  std::vector<std::pair<Z, Z>> diffs(static_cast<size_t>(p));
  for (Z j = 0; j < p; ++j) {
    Z m_part;
    if (l == 1 && j == 0) {
      m_part = v_even ? 1 : -1;
    } else if (l > 1 && (j == 0 || j == l - 1)) {
      m_part = v_even ? 1 : 0;
    } else {
      // Generic step: [a]+[m] when j q^{-1} lands in 1..k-2 mod p.
      Z pos = mod(j * qp, p);
      m_part = (pos >= 1 && pos <= kk - 2) ? 1 : 0;
    }
    diffs[static_cast<size_t>(j)] = {1, m_part};
  }
  return diffs;
}

namespace {

HalfGrading to_grading(const Homology& h, Z x, Z y) {
  HalfGrading g;
  g.two_t = 2 * (h.t_a * x + h.t_m * y);
  g.two_r = mod(2 * (h.r_a * x + h.r_m * y), 2 * h.d);
  return g;
}

HalfGrading negate(const HalfGrading& g, Z d) {
  return {-g.two_t, mod(-g.two_r, 2 * d)};
}

// Middles, local polynomials, the signed chi and the unsigned multiset, all
// before the canonical shift.
struct RawEuler {
  Homology h1;
  std::vector<ClassEuler> classes;
  GroupRing chi;
  std::map<HalfGrading, Z> counts;
};

RawEuler raw_euler(const Constrained& k) {
  RawEuler r;
  r.h1 = homology_presentation(k);
  const Homology& h = r.h1;

  std::vector<std::pair<Z, Z>> diffs = walk_differences(k);
  std::vector<std::pair<Z, Z>> mid(static_cast<size_t>(k.p), {0, 0});
  for (Z j = 1; j < k.p; ++j) {
    auto [x, y] = mid[static_cast<size_t>(j - 1)];
    auto [dx, dy] = diffs[static_cast<size_t>(j)];
    mid[static_cast<size_t>(j)] = {x + dx, y + dy};
  }

  const TwoBridge pattern = pattern_of(k);
  const LaurentPoly delta1 = alexander_two_bridge(pattern);
  const LaurentPoly delta2 = k.l > 1
                                 ? alexander_two_bridge(derived_two_bridge(pattern))
                                 : LaurentPoly::one();
  for (Z j = 1; j <= k.p; ++j) {
    ClassEuler ce;
    ce.j = j;
    ce.family_one = j >= k.l;
    ce.middle = to_grading(h, mid[static_cast<size_t>(j - 1)].first,
                           mid[static_cast<size_t>(j - 1)].second);
    ce.local = ce.family_one ? delta1 : delta2;
    for (auto [e, c] : ce.local.c) {
      HalfGrading g{ce.middle.two_t + 2 * e * h.t_m,
                    mod(ce.middle.two_r + 2 * e * h.r_m, 2 * h.d)};
      r.chi[g] += c;
      if (r.chi[g] == 0) r.chi.erase(g);
      r.counts[g] += std::llabs(c);
    }
    r.classes.push_back(std::move(ce));
  }
  return r;
}

bool negation_invariant(const std::map<HalfGrading, Z>& counts, Z d) {
  for (const auto& [g, n] : counts) {
    auto it = counts.find(negate(g, d));
    if (it == counts.end() || it->second != n) return false;
  }
  return true;
}

std::map<HalfGrading, Z> shifted_counts(const std::map<HalfGrading, Z>& counts,
                                        Z st, Z sr, Z d) {
  std::map<HalfGrading, Z> out;
  for (const auto& [g, n] : counts) {
    out[{g.two_t + st, mod(g.two_r + sr, 2 * d)}] += n;
  }
  return out;
}

// The free part of the shift is forced by the extremes; the torsion part is
// the least value in [0, 2d) making the multiset negation-invariant.
HalfGrading canonical_shift(const std::map<HalfGrading, Z>& counts, Z d) {
  Z lo = counts.begin()->first.two_t;
  Z hi = lo;
  for (const auto& [g, n] : counts) {
    lo = std::min(lo, g.two_t);
    hi = std::max(hi, g.two_t);
  }
  Z st = -(lo + hi) / 2;
  for (Z sr = 0; sr < 2 * d; ++sr) {
    if (negation_invariant(shifted_counts(counts, st, sr, d), d)) {
      return {st, sr};
    }
  }
  throw std::logic_error("no canonical representative exists");
}

EulerData shift_euler(RawEuler r) {
  HalfGrading s = canonical_shift(r.counts, r.h1.d);
  EulerData out;
  out.h1 = r.h1;
  for (ClassEuler& ce : r.classes) {
    ce.middle.two_t += s.two_t;
    ce.middle.two_r = mod(ce.middle.two_r + s.two_r, 2 * r.h1.d);
    out.classes.push_back(std::move(ce));
  }
  for (const auto& [g, c] : r.chi) {
    out.chi[{g.two_t + s.two_t, mod(g.two_r + s.two_r, 2 * r.h1.d)}] = c;
  }
  return out;
}

}  // namespace

EulerData hfk_euler(const Constrained& k) { return shift_euler(raw_euler(k)); }

std::vector<HalfGrading> grading_walk(const Constrained& k) {
  EulerData e = hfk_euler(k);
  std::vector<HalfGrading> out;
  out.reserve(e.classes.size());
  for (const ClassEuler& ce : e.classes) out.push_back(ce.middle);
  return out;
}

std::vector<HalfGrading> middle_gradings(const Constrained& k) {
  return grading_walk(k);
}

Dimensions hfk_dimensions(const Constrained& k) {
  EulerData e = hfk_euler(k);
  Dimensions dims;
  for (const ClassEuler& ce : e.classes) {
    std::map<HalfGrading, Z> local;
    for (auto [exp, c] : ce.local.c) {
      HalfGrading g{ce.middle.two_t + 2 * exp * e.h1.t_m,
                    mod(ce.middle.two_r + 2 * exp * e.h1.r_m, 2 * e.h1.d)};
      local[g] += std::llabs(c);
    }
    for (const auto& [g, n] : local) {
      dims.total[g] += n;
      dims.total_dimension += n;
    }
    dims.per_class.push_back(std::move(local));
  }
  return dims;
}

Identify identify_h1(const Homology& a, const Homology& b) {
  if (a.p != b.p || a.d != b.d) {
    throw NotIdentifiable("presentations have different p or d");
  }
  const Z d = a.d;
  const Z step = a.t_m;  // p/d, shared
  for (Z y = 1; y <= d; ++y) {
    if (gcdz(y, d) != 1) continue;
    for (Z x = 0; x < std::max<Z>(d, 1); ++x) {
      if (mod(step * x + a.r_m * y, d) == mod(b.r_m, d)) {
        return {1, x, y};
      }
    }
  }
  throw NotIdentifiable("no automorphism matches the images of [m]");
}

HalfGrading apply_identify(const Identify& id, Z d, const HalfGrading& g) {
  return {id.eps * g.two_t, mod(g.two_t * id.x + g.two_r * id.y, 2 * d)};
}

WidthGenus width_genus_fibred(const Constrained& k) {
  EulerData e = hfk_euler(k);
  Dimensions dims = hfk_dimensions(k);
  Z lo = dims.total.begin()->first.two_t;
  Z hi = lo;
  for (const auto& [g, n] : dims.total) {
    lo = std::min(lo, g.two_t);
    hi = std::max(hi, g.two_t);
  }
  WidthGenus w;
  w.width = (hi - lo) / 2;
  w.thurston_norm = w.width - e.h1.t_m;
  w.boundary_components = gcdz(e.h1.d, e.h1.t_m);
  w.top_rank = 0;
  for (const auto& [g, n] : dims.total) {
    if (g.two_t == hi) w.top_rank += n;
  }
  w.fibred = w.top_rank == 1;
  if (w.thurston_norm < w.boundary_components) {
    throw DegenerateNorm(w.width, w.thurston_norm, w.boundary_components,
                         w.top_rank, w.fibred);
  }
  if ((w.thurston_norm - w.boundary_components) % 2 != 0) {
    throw std::logic_error("thurston norm and boundary count disagree mod 2");
  }
  w.genus = 1 + (w.thurston_norm - w.boundary_components) / 2;
  return w;
}

std::map<HalfGrading, LaurentPoly> chi_cosets(const GroupRing& chi,
                                              const Homology& h) {
  std::map<HalfGrading, LaurentPoly> out;
  const Z step_t = 2 * h.t_m;
  const Z step_r = 2 * h.r_m;
  for (const auto& [g, c] : chi) {
    Z e = floordiv(g.two_t, step_t);
    HalfGrading rep{g.two_t - e * step_t, mod(g.two_r - e * step_r, 2 * h.d)};
    out[rep].add_term(c, e);
  }
  return out;
}

LaurentPoly chi_free_poly(const EulerData& e) {
  if (e.h1.d != 1) {
    throw InvalidParameters("chi_free_poly needs torsion-free homology");
  }
  LaurentPoly out;
  for (const auto& [g, c] : e.chi) out.add_term(c, g.two_t);
  return out;
}

}  // namespace ck
