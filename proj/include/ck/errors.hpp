#pragma once
// Shared error taxonomy. Each type names the precondition or identification
// that failed; callers catch by type, messages carry the offending values.

#include <stdexcept>

namespace ck {

// Parameter tuple outside its admissible range (u even, gcd violation, ...).
struct InvalidParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Knot-group isomorphism verification requested outside its proven window.
struct InvalidRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Surgery shift or table case asked for arguments it is not defined on.
struct OutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Two knots live in lens spaces that cannot be identified.
struct AmbientMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Homology torsion orders disagree where equality is required.
struct TorsionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// No grading-preserving identification of the two homology groups exists.
struct NotIdentifiable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fox-derivative image failed to divide exactly in the target ring.
struct NonExactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One-variable specialization requested but the homology has torsion.
struct TorsionTarget : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Integer surgery on the magic link produced a non-lens-space manifold.
struct NotLensSpace : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Census record is not symmetric where symmetry is required.
struct NonSymmetricInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Knot has no one-bridge braid presentation under the supported reduction.
struct NotOneBridgeEligible : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace ck
