#pragma once

// Stabilizers of points of (M_n)^m under PGL_n extended by signed
// transposition: intertwiner spaces, the generation certificate, the unique
// element g with tau(a) = g a g^-1, and normalizer membership.

#include <optional>
#include <string_view>
#include <vector>

#include "involut/matrix.hpp"

namespace involut {

struct IntertwinerBasis {
  Eigen::Index n = 0;
  std::vector<MatrixQ> basis;  // each entry primitive integral, leading entry positive

  std::size_t dimension() const { return basis.size(); }
};

/// Basis of {g : g a_i = b_i g for all i}. Entries are normalized to coprime
/// integers so the basis is canonical up to the kernel's column order.
IntertwinerBasis intertwiner_basis(const TupleQ& a, const TupleQ& b);

/// Whether a_1, ..., a_m generate M_n as an algebra (closure of the identity
/// under left multiplication by the a_i spans all n^2 dimensions).
bool generates_full_algebra(const TupleQ& a);

/// Whether the centralizer of the tuple is the scalars.
bool centralizer_is_scalar(const TupleQ& a);

enum class StabilizerKind { Unique, NoneExists, Ambiguous };

std::string_view to_string(StabilizerKind k);

struct StabilizerOutcome {
  StabilizerKind kind = StabilizerKind::NoneExists;
  std::size_t intertwiner_dimension = 0;
  std::optional<ProjectiveQ> element;  // set iff kind == Unique
  Symmetry symmetry = Symmetry::NotSelfTransposed;
};

/// Finds g in PGL_n with tau_eps(a) = g a g^-1. The intertwiner space is
/// 0-dimensional (NoneExists), spanned by one invertible g (Unique, with g
/// verified to be symmetric or skew), or anything else (Ambiguous).
/// Throws std::invalid_argument when a does not generate M_n.
StabilizerOutcome stabilizer_element(const SignVector& signs, const TupleQ& a);

enum class CanonicalStabilizer { Trivial, Tau, TauG0 };

std::string_view to_string(CanonicalStabilizer c);

/// Tau: g^t g is scalar (g normalizes {1, tau}). TauG0: g^t g0 g is
/// proportional to g0. Throws std::invalid_argument for TauG0 with odd n or
/// for the trivial stabilizer.
bool normalizer_membership(const ProjectiveQ& g, CanonicalStabilizer canonical);

}  // namespace involut
