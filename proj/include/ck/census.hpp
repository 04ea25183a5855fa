#pragma once
// Classification of lens-space filling records: the Euler characteristic of
// the core knot from the record's Alexander polynomial, its residue-class
// decomposition, form counting, and detection of simple, constrained and
// general constrained fillings with virtual parameters.

#include <string>
#include <vector>

#include "ck/arith.hpp"
#include "ck/poly.hpp"

namespace ck {

// A filling record: surgery on the cusped manifold gives L(p, q) and the core
// of the filling torus is the knot. `alexander` is the Alexander polynomial
// of the cusped manifold, whose first homology is Z + Z/torsion_d; the
// meridian has free exponent meridian_exponent (= p when torsion is trivial).
struct FillingRecord {
  std::string name;
  Z p = 1;
  Z q = 0;
  Z torsion_d = 1;
  LaurentPoly alexander;
  Z meridian_exponent = 1;
};

struct ChiDecomposition {
  LaurentPoly chi;                    // Delta(t) (1 - t^p) / (1 - t)
  std::vector<LaurentPoly> residues;  // F_0 .. F_{p-1}, polynomials in t^p
};

// Requires torsion_d = 1, p >= 1, gcd(p, q) = 1 and |meridian_exponent| = p.
// Throws NonSymmetricInput when the Alexander polynomial is not symmetric up
// to +- t^k, InvalidParameters otherwise.
ChiDecomposition chi_from_record(const FillingRecord& r);

enum class FillingVerdict {
  SimpleFilling,              // every residue is +- t^k
  ConstrainedFilling,         // chi matches a constrained knot classwise
  GeneralConstrainedFilling,  // only the one-variable polynomials match
  Other,
};

struct FillingClassification {
  Z n_forms = 0;             // residues counted up to +- t^k
  FillingVerdict verdict = FillingVerdict::Other;
  std::vector<Z> virtual_l;  // candidates {l, p - l + 2} clipped to [1, p]
  Z virtual_u = 0;
  Z virtual_v = 0;
  std::vector<LaurentPoly> residues;
};

// Never throws: records that fail any step classify as Other.
FillingClassification classify_filling(const FillingRecord& r);

// The representative of f under f ~ +- t^k f: lowest exponent shifted to 0,
// lowest coefficient positive. Zero maps to zero.
LaurentPoly canonical_unit_form(const LaurentPoly& f);

}  // namespace ck
