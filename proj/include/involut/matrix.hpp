#pragma once

// Matrix tuples, PGL_n elements and the two actions on (M_n)^m: simultaneous
// conjugation and signed transposition.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "involut/linalg.hpp"
#include "involut/random.hpp"

namespace involut {

template <typename Scalar>
struct MatrixTuple {
  Eigen::Index n = 0;
  std::vector<Matrix<Scalar>> components;

  MatrixTuple() = default;
  MatrixTuple(Eigen::Index dim, std::vector<Matrix<Scalar>> comps) : n(dim), components(std::move(comps)) {
    for (const auto& c : components) {
      if (c.rows() != n || c.cols() != n) throw std::invalid_argument("tuple components must all be n x n");
    }
  }

  std::size_t m() const { return components.size(); }
  const Matrix<Scalar>& operator[](std::size_t i) const { return components[i]; }

  friend bool operator==(const MatrixTuple& a, const MatrixTuple& b) {
    if (a.n != b.n || a.m() != b.m()) return false;
    for (std::size_t i = 0; i < a.m(); ++i) {
      if (a.components[i] != b.components[i]) return false;
    }
    return true;
  }
};

using TupleQ = MatrixTuple<Rational>;

/// Signs epsilon_i = +-1 twisting the transpose action componentwise.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<int> signs);
  static SignVector all_plus(std::size_t m) { return SignVector(std::vector<int>(m, 1)); }
  /// Parses "+,-,+" (also accepts "1,-1,1").
  static SignVector parse(std::string_view text);

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  const std::vector<int>& values() const { return signs_; }
  bool all_positive() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<int> signs_;
};

enum class Symmetry { Symmetric, Skew, NotSelfTransposed };

std::string_view to_string(Symmetry s);

/// An element of PGL_n: an invertible matrix up to a nonzero scalar.
template <typename Scalar>
class ProjectiveMatrix {
 public:
  explicit ProjectiveMatrix(Matrix<Scalar> representative) : rep_(std::move(representative)) {
    if (rep_.rows() != rep_.cols() || rep_.rows() == 0) {
      throw std::invalid_argument("projective matrix must be square and nonempty");
    }
    if (is_zero(determinant(rep_))) throw std::invalid_argument("projective matrix must be invertible");
  }

  static ProjectiveMatrix identity(Eigen::Index n) { return ProjectiveMatrix(Matrix<Scalar>::Identity(n, n)); }

  Eigen::Index n() const { return rep_.rows(); }
  const Matrix<Scalar>& representative() const { return rep_; }

  /// The representative scaled so its first nonzero entry (row-major) is 1.
  Matrix<Scalar> normalized() const {
    for (Eigen::Index i = 0; i < rep_.rows(); ++i)
      for (Eigen::Index j = 0; j < rep_.cols(); ++j)
        if (!is_zero(rep_(i, j))) {
          const Scalar lead = rep_(i, j);
          Matrix<Scalar> out = rep_;
          for (Eigen::Index r = 0; r < out.rows(); ++r)
            for (Eigen::Index c = 0; c < out.cols(); ++c) out(r, c) = out(r, c) / lead;
          return out;
        }
    throw std::logic_error("invertible matrix with no nonzero entry");
  }

  ProjectiveMatrix inverse() const { return ProjectiveMatrix(involut::inverse(rep_)); }

  friend ProjectiveMatrix operator*(const ProjectiveMatrix& a, const ProjectiveMatrix& b) {
    return ProjectiveMatrix(Matrix<Scalar>(a.rep_ * b.rep_));
  }

 private:
  Matrix<Scalar> rep_;
};

using ProjectiveQ = ProjectiveMatrix<Rational>;
using ProjectiveT = ProjectiveMatrix<TowerScalar>;

/// Whether a and b are proportional by a nonzero scalar (a, b of equal size).
template <typename Derived1, typename Derived2>
bool proportional(const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b) {
  using Scalar = typename Derived1::Scalar;
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("size mismatch");
  std::optional<std::pair<Scalar, Scalar>> ratio;  // (a_ij, b_ij) at the first nonzero of a
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const bool za = is_zero(a(i, j));
      const bool zb = is_zero(b(i, j));
      if (za != zb) return false;
      if (za) continue;
      if (!ratio) {
        ratio.emplace(a(i, j), b(i, j));
      } else if (!(a(i, j) * ratio->second == b(i, j) * ratio->first)) {
        return false;
      }
    }
  return ratio.has_value();
}

template <typename Scalar>
bool proj_eq(const ProjectiveMatrix<Scalar>& g, const ProjectiveMatrix<Scalar>& h) {
  if (g.n() != h.n()) throw std::invalid_argument("projective matrices of different size");
  return g.normalized() == h.normalized();
}

template <typename Scalar>
ProjectiveMatrix<Scalar> proj_transpose(const ProjectiveMatrix<Scalar>& g) {
  return ProjectiveMatrix<Scalar>(Matrix<Scalar>(g.representative().transpose()));
}

/// Symmetric when g^t = g in PGL_n and the representative is symmetric, Skew
/// when the representative is skew-symmetric; these are the only possible
/// proportionality constants for a projectively self-transposed matrix.
template <typename Scalar>
Symmetry classify_projective_symmetry(const ProjectiveMatrix<Scalar>& g) {
  const auto& a = g.representative();
  if (is_symmetric(a)) return Symmetry::Symmetric;
  if (is_skew_symmetric(a)) return Symmetry::Skew;
  return Symmetry::NotSelfTransposed;
}

/// (h a_1 h^-1, ..., h a_m h^-1)
template <typename Scalar>
MatrixTuple<Scalar> conjugate_tuple(const ProjectiveMatrix<Scalar>& h, const MatrixTuple<Scalar>& a) {
  if (h.n() != a.n) throw std::invalid_argument("conjugation dimension mismatch");
  const Matrix<Scalar> h_inv = involut::inverse(h.representative());
  std::vector<Matrix<Scalar>> out;
  out.reserve(a.m());
  for (const auto& c : a.components) out.emplace_back(h.representative() * c * h_inv);
  return MatrixTuple<Scalar>(a.n, std::move(out));
}

/// (eps_1 a_1^t, ..., eps_m a_m^t)
template <typename Scalar>
MatrixTuple<Scalar> tau_act(const SignVector& signs, const MatrixTuple<Scalar>& a) {
  if (signs.size() != a.m()) throw std::invalid_argument("sign vector length does not match tuple");
  std::vector<Matrix<Scalar>> out;
  out.reserve(a.m());
  for (std::size_t i = 0; i < a.m(); ++i) {
    Matrix<Scalar> t = a.components[i].transpose();
    if (signs[i] < 0) t = -t;
    out.push_back(std::move(t));
  }
  return MatrixTuple<Scalar>(a.n, std::move(out));
}

template <typename Scalar>
MatrixTuple<Scalar> transpose_tuple(const MatrixTuple<Scalar>& a) {
  return tau_act(SignVector::all_plus(a.m()), a);
}

/// J = [[0, I], [-I, 0]] with I of order n/2.
MatrixQ standard_symplectic(Eigen::Index n);
/// The projective class g0 of J.
ProjectiveQ g0(Eigen::Index n);

/// Elementary matrix e_{ij} (1-based indices, as in the usual notation).
MatrixQ elementary(Eigen::Index n, Eigen::Index i, Eigen::Index j);

enum class Family { Full, SymmetricComponents, SymplecticComponents };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

inline constexpr long kDefaultSampleBound = 10;

MatrixQ random_matrix(Eigen::Index n, long bound, Rng& rng);
MatrixQ random_symmetric(Eigen::Index n, long bound, Rng& rng);
MatrixQ random_skew(Eigen::Index n, long bound, Rng& rng);
/// Random integer matrix with nonzero determinant (resampled until invertible).
ProjectiveQ random_projective(Eigen::Index n, long bound, Rng& rng);

/// Deterministic sample of a point of (M_n)^m from the named family.
/// SymplecticComponents draws a_i = J w_i with w_i skew, so that
/// g0 a_i g0^-1 = a_i^t for every i.
TupleQ sample_tuple(Eigen::Index n, std::size_t m, Family family, long bound, std::uint64_t seed);

}  // namespace involut
