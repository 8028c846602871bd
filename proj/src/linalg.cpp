#include "involut/linalg.hpp"

namespace involut {

VectorQ primitive(const VectorQ& v) {
  BigInt lcm_den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v(i).denominator().get_mpz_t());
  }
  BigInt content = 0;
  Eigen::Index lead = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    if (lead < 0) lead = i;
    const BigInt num = (v(i) * Rational(lcm_den)).numerator();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  if (lead < 0) throw std::invalid_argument("primitive part of the zero vector");
  Rational scale(lcm_den, content);
  if (v(lead).sign() < 0) scale = -scale;
  VectorQ out = v;
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) *= scale;
  return out;
}

MatrixQ integral_rows(const MatrixQ& m) {
  MatrixQ out = m;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    BigInt lcm_den = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), m(i, j).denominator().get_mpz_t());
    }
    if (lcm_den == 1) continue;
    const Rational f(lcm_den);
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) *= f;
  }
  return out;
}

VectorQ SubspaceBasis::reduce(VectorQ v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = v(pivots_[k]);
    if (c.is_zero()) continue;
    const Rational f = c;
    v -= rows_[k] * f;
  }
  return v;
}

bool SubspaceBasis::contains(const VectorQ& v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  return is_zero_matrix(reduce(v));
}

bool SubspaceBasis::insert(const VectorQ& v) {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  VectorQ r = reduce(v);
  Eigen::Index pivot = 0;
  while (pivot < dim_ && r(pivot).is_zero()) ++pivot;
  if (pivot == dim_) return false;
  r /= Rational(r(pivot));
  for (auto& row : rows_) {
    if (row(pivot).is_zero()) continue;
    const Rational f = row(pivot);
    row -= r * f;
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace involut
