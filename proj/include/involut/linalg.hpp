#pragma once

// Exact dense linear algebra over a field scalar (Rational or TowerScalar).
// Elimination is fraction-free (Bareiss): on integral input every entry of the
// echelon form is a minor of the input, which keeps coefficient growth linear.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "involut/rational.hpp"
#include "involut/tower.hpp"

namespace involut {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;
using MatrixT = Matrix<TowerScalar>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const TowerScalar& x) { return x.is_zero(); }

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols() && m == m.transpose();
}

template <typename Derived>
bool is_skew_symmetric(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols() && m == -m.transpose();
}

template <typename Scalar>
struct Echelon {
  Matrix<Scalar> form;               // row echelon form, rows below rank are zero
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
  int row_swaps = 0;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Fraction-free row echelon form with first-nonzero pivoting.
template <typename Scalar>
Echelon<Scalar> bareiss_echelon(Matrix<Scalar> m) {
  Echelon<Scalar> out;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Scalar previous(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot_row = r;
    while (pivot_row < rows && is_zero(m(pivot_row, c))) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != r) {
      m.row(r).swap(m.row(pivot_row));
      ++out.row_swaps;
    }
    const Scalar pivot = m(r, c);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      const Scalar factor = m(i, c);
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        m(i, j) = (pivot * m(i, j) - factor * m(r, j)) / previous;
      }
      m(i, c) = Scalar(0);
    }
    previous = pivot;
    out.pivots.push_back(c);
    ++r;
  }
  out.form = std::move(m);
  return out;
}

template <typename Scalar>
Scalar determinant(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  const Echelon<Scalar> e = bareiss_echelon(m);
  if (e.rank() < m.rows()) return Scalar(0);
  Scalar det = e.form(m.rows() - 1, m.cols() - 1);
  return e.row_swaps % 2 == 0 ? det : Scalar(-det);
}

template <typename Scalar>
Eigen::Index rank(const Matrix<Scalar>& m) {
  return bareiss_echelon(m).rank();
}

/// Gauss-Jordan inverse; throws std::domain_error when m is singular.
template <typename Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix<Scalar> a = m;
  Matrix<Scalar> inv = Matrix<Scalar>::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) throw std::domain_error("matrix is singular");
    if (p != c) {
      a.row(c).swap(a.row(p));
      inv.row(c).swap(inv.row(p));
    }
    const Scalar pivot_inv = Scalar(1) / a(c, c);
    a.row(c) *= pivot_inv;
    inv.row(c) *= pivot_inv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || is_zero(a(i, c))) continue;
      const Scalar f = a(i, c);
      a.row(i) -= f * a.row(c);
      inv.row(i) -= f * inv.row(c);
    }
  }
  return inv;
}

/// Basis of {x : m x = 0}, one vector per non-pivot column, obtained by back
/// substitution on the echelon form.
template <typename Scalar>
std::vector<Vector<Scalar>> kernel(const Matrix<Scalar>& m) {
  const Echelon<Scalar> e = bareiss_echelon(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Vector<Scalar>> basis;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> x = Vector<Scalar>::Zero(cols);
    x(free) = Scalar(1);
    for (Eigen::Index r = e.rank() - 1; r >= 0; --r) {
      const Eigen::Index pc = e.pivots[static_cast<std::size_t>(r)];
      Scalar acc(0);
      for (Eigen::Index j = pc + 1; j < cols; ++j) {
        if (!is_zero(e.form(r, j)) && !is_zero(x(j))) acc += e.form(r, j) * x(j);
      }
      x(pc) = -acc / e.form(r, pc);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Scales a nonzero rational vector to coprime integers with a positive
/// leading entry.
VectorQ primitive(const VectorQ& v);

/// Clears denominators row by row; the row space is unchanged.
MatrixQ integral_rows(const MatrixQ& m);

/// Incrementally maintained basis of a subspace of Q^dim, kept in reduced
/// echelon form so that membership is a single reduction.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(Eigen::Index dim) : dim_(dim) {}

  /// Adds v if it is independent of the current basis; returns whether it was.
  bool insert(const VectorQ& v);
  bool contains(const VectorQ& v) const;
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(rows_.size()); }
  Eigen::Index ambient_dimension() const { return dim_; }

 private:
  VectorQ reduce(VectorQ v) const;

  Eigen::Index dim_;
  std::vector<VectorQ> rows_;
  std::vector<Eigen::Index> pivots_;
};

}  // namespace involut
