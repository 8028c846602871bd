#pragma once

// Congruence normal forms over an algebraically closed field, computed
// exactly: invertible symmetric matrices are congruent to I (after adjoining
// square roots of the diagonal pivots), invertible skew matrices to J (over Q).

#include "involut/stabilizer.hpp"

namespace involut {

struct SymmetricNormalForm {
  MatrixT b;            // b s b^t == I
  TowerContext context;
};

/// Throws std::invalid_argument if s is not symmetric or is singular, and
/// std::length_error if more square roots are needed than the tower allows.
SymmetricNormalForm sym_congruence_to_identity(const MatrixQ& s);

/// b with b w b^t == J. Throws std::invalid_argument if w is not
/// skew-symmetric or is singular.
MatrixQ skew_congruence_to_J(const MatrixQ& w);

struct TauCanonicalForm {
  ProjectiveT h;  // h^t g h is projectively 1 (Tau) or g0 (TauG0)
  CanonicalStabilizer canonical = CanonicalStabilizer::Tau;
  TowerContext context;
};

/// Conjugates tau g to tau or tau g0 in the extended group:
/// h^-1 (tau g) h = tau (h^t g h). Throws std::invalid_argument when g is not
/// projectively self-transposed.
TauCanonicalForm canonicalize_tau_g(const ProjectiveQ& g);

/// Recomputes h^t g h and checks it against the canonical target.
bool verify_canonical_form(const ProjectiveQ& g, const TauCanonicalForm& form);

}  // namespace involut
