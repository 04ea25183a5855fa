// Filling-record classification: residue decomposition of the Euler
// characteristic and recovery of virtual constrained-knot parameters.

#include "ck/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "ck/errors.hpp"
#include "ck/floer.hpp"
#include "ck/groups.hpp"
#include "ck/knots.hpp"

namespace ck {

LaurentPoly canonical_unit_form(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  LaurentPoly g = f.shifted(-f.min_deg());
  if (g.c.begin()->second < 0) g = -g;
  return g;
}

ChiDecomposition chi_from_record(const FillingRecord& r) {
  if (r.torsion_d != 1) throw InvalidParameters("record torsion is not trivial");
  if (r.p < 1 || gcdz(r.p, r.q) != 1)
    throw InvalidParameters("lens parameters are not coprime");
  if (std::llabs(r.meridian_exponent) != r.p)
    throw InvalidParameters("meridian exponent does not match the order");
  if (!unit_equivalent(r.alexander, r.alexander.mirrored()))
    throw NonSymmetricInput("alexander polynomial is not symmetric");

  ChiDecomposition out;
  out.chi = r.alexander * geometric_sum(r.p);
  out.residues.assign(static_cast<size_t>(r.p), LaurentPoly::zero());
  for (auto [e, c] : out.chi.c)
    out.residues[static_cast<size_t>(mod(e, r.p))].add_term(c, floordiv(e, r.p));
  return out;
}

namespace {

bool is_unit_monomial(const LaurentPoly& f) {
  return f.c.size() == 1 && std::llabs(f.c.begin()->second) == 1;
}

// Symmetric up to units, gap-free support, strictly alternating signs; the
// shape of two-bridge Alexander polynomials. Monomials pass.
bool symmetric_alternating(const LaurentPoly& f) {
  if (f.is_zero() || !unit_equivalent(f, f.mirrored())) return false;
  Z prev_e = 0, prev_c = 0;
  for (auto [e, c] : f.c) {
    if (prev_c != 0 && (e != prev_e + 1 || (prev_c > 0) == (c > 0))) return false;
    prev_e = e;
    prev_c = c;
  }
  return true;
}

using UnitClassCounts = std::map<std::map<Z, Z>, Z>;

UnitClassCounts unit_class_counts(const std::vector<LaurentPoly>& polys) {
  UnitClassCounts out;
  for (const LaurentPoly& f : polys) ++out[canonical_unit_form(f).c];
  return out;
}

UnitClassCounts knot_class_counts(const Constrained& k) {
  UnitClassCounts out;
  for (const ClassEuler& ce : hfk_euler(k).classes)
    ++out[canonical_unit_form(ce.local).c];
  return out;
}

std::vector<Z> q_candidates_of(Z p, Z q) {
  std::set<Z> s;
  Z q0 = mod(q, p);
  s.insert(q0);
  s.insert(mod(-q0, p));
  Z qi = mod_inverse(q0, p);
  s.insert(qi);
  s.insert(mod(-qi, p));
  return {s.begin(), s.end()};
}

std::vector<Z> l_candidates_of(Z p, Z l) {
  std::set<Z> s{l};
  if (p - l + 2 >= 1 && p - l + 2 <= p) s.insert(p - l + 2);
  return {s.begin(), s.end()};
}

// The knot C(p, q', l', u, v) for some admissible q', l' whose classwise
// Euler characteristic matches the residue classes up to units; failing that,
// one whose one-variable Alexander polynomial matches the record's.
FillingVerdict match_candidates(const FillingRecord& r, const std::vector<Z>& ls,
                                Z u, Z v, const UnitClassCounts& target) {
  std::vector<Z> qs = q_candidates_of(r.p, r.q);
  for (Z l : ls)
    for (Z q : qs) {
      try {
        Constrained k = validate_constrained(r.p, q, l, u, v);
        if (homology_presentation(k).d != 1) continue;
        if (knot_class_counts(k) == target) return FillingVerdict::ConstrainedFilling;
      } catch (const std::exception&) {
      }
    }
  for (Z l : ls)
    for (Z q : qs) {
      try {
        Constrained k = validate_constrained(r.p, q, l, u, v);
        if (homology_presentation(k).d != 1) continue;
        LaurentPoly dk = knot_alexander(k);
        if (unit_equivalent(dk, r.alexander) ||
            unit_equivalent(dk, r.alexander.mirrored()))
          return FillingVerdict::GeneralConstrainedFilling;
      } catch (const std::exception&) {
      }
    }
  return FillingVerdict::Other;
}

}  // namespace

FillingClassification classify_filling(const FillingRecord& r) {
  FillingClassification out;
  ChiDecomposition dec;
  try {
    dec = chi_from_record(r);
  } catch (const std::exception&) {
    return out;
  }
  out.residues = dec.residues;
  UnitClassCounts counts = unit_class_counts(dec.residues);
  out.n_forms = static_cast<Z>(counts.size());

  bool all_monomial = true;
  for (const LaurentPoly& f : dec.residues)
    if (!is_unit_monomial(f)) all_monomial = false;
  if (all_monomial) {
    out.verdict = FillingVerdict::SimpleFilling;
    return out;
  }
  if (out.n_forms > 2) return out;
  for (const LaurentPoly& f : dec.residues)
    if (!symmetric_alternating(f)) return out;

  std::vector<Z> dets;
  for (const LaurentPoly& f : dec.residues) dets.push_back(std::llabs(f.eval(-1)));

  if (out.n_forms == 1) {
    // one non-monomial form: only l = 1 (the satellite case) fits; the
    // pattern is pinned up to two-bridge equivalence, search the smallest v
    Z u = dets[0];
    if (u < 3 || u % 2 == 0) return out;
    for (Z v = 1; 2 * v < u; ++v) {
      if (gcdz(u, v) != 1) continue;
      FillingVerdict verdict = match_candidates(r, {1}, u, v, counts);
      if (verdict != FillingVerdict::Other) {
        out.verdict = verdict;
        out.virtual_l = {1};
        out.virtual_u = u;
        out.virtual_v = v;
        return out;
      }
    }
    return out;
  }

  // two forms: u and u - 2v are the two determinants, the derived form
  // occupies classes 1 .. l-1
  Z u = dets[0], u2 = dets[0];
  for (Z d : dets) {
    u = std::max(u, d);
    u2 = std::min(u2, d);
  }
  if (u == u2 || (u - u2) % 2 != 0) return out;
  Z v = (u - u2) / 2;
  Z minority = 0;
  for (Z d : dets)
    if (d == u2) ++minority;
  std::vector<Z> ls = l_candidates_of(r.p, minority + 1);
  FillingVerdict verdict = match_candidates(r, ls, u, v, counts);
  if (verdict != FillingVerdict::Other) {
    out.verdict = verdict;
    out.virtual_l = ls;
    out.virtual_u = u;
    out.virtual_v = v;
  }
  return out;
}

}  // namespace ck
