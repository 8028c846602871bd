#pragma once

// Noncommutative polynomials in m variables X1..Xm with rational
// coefficients: representatives of elements of the generic matrix ring,
// handled through their evaluations at matrix tuples.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "involut/matrix.hpp"

namespace involut {

/// Variable indices, 0-based (index i stands for X_{i+1}).
using Word = std::vector<int>;

struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline constexpr std::size_t kMaxPolyDegree = 12;
inline constexpr std::size_t kMaxPolyTerms = 10000;

class NcPoly {
 public:
  using Terms = std::map<Word, Rational, WordOrder>;

  explicit NcPoly(std::size_t m) : m_(m) {}
  NcPoly(std::size_t m, const Rational& constant);

  /// X_{index+1}.
  static NcPoly variable(std::size_t m, int index);
  static NcPoly monomial(std::size_t m, Word word, const Rational& coeff = Rational(1));

  /// Parses text such as "3 X1 X2 X1 + X2 - 1/2 X1^2"; a term is an optional
  /// coefficient followed by variables, optionally separated by '*'.
  /// Throws std::invalid_argument on malformed text or an index above m.
  static NcPoly parse(std::string_view text, std::size_t m);

  std::size_t num_vars() const { return m_; }
  const Terms& terms() const { return terms_; }
  std::size_t degree() const;
  bool is_zero() const { return terms_.empty(); }

  std::string str() const;

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Rational& c);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator-(NcPoly a) { return a *= Rational(-1); }
  friend NcPoly operator*(NcPoly a, const Rational& c) { return a *= c; }
  friend NcPoly operator*(const Rational& c, NcPoly a) { return a *= c; }
  /// Throws std::length_error when the product exceeds the degree or term caps.
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);

  friend bool operator==(const NcPoly&, const NcPoly&) = default;

 private:
  void add_term(const Word& w, const Rational& c);
  void check_vars(const NcPoly& o) const;

  std::size_t m_;
  Terms terms_;
};

NcPoly pow(const NcPoly& p, unsigned exponent);

/// Reverses every monomial: the anti-automorphism rho.
NcPoly rho(const NcPoly& p);

/// rho(p(eps_1 X_1, ..., eps_m X_m)).
NcPoly sigma_tilde(const SignVector& signs, const NcPoly& p);

/// p(a_1, ..., a_m); the empty word evaluates to the identity.
template <typename Scalar>
Matrix<Scalar> eval(const NcPoly& p, const MatrixTuple<Scalar>& a) {
  if (p.num_vars() != a.m()) throw std::invalid_argument("polynomial and tuple disagree on m");
  const Eigen::Index n = a.n;
  Matrix<Scalar> out = Matrix<Scalar>::Zero(n, n);
  for (const auto& [word, coeff] : p.terms()) {
    Matrix<Scalar> prod = Matrix<Scalar>::Identity(n, n);
    for (int v : word) prod = prod * a.components[static_cast<std::size_t>(v)];
    out += prod * Scalar(coeff);
  }
  return out;
}

template <typename Scalar>
Scalar trace_eval(const NcPoly& p, const MatrixTuple<Scalar>& a) {
  const Matrix<Scalar> v = eval(p, a);
  Scalar t(0);
  for (Eigen::Index i = 0; i < v.rows(); ++i) t += v(i, i);
  return t;
}

inline constexpr long kTraceTestBound = 5;

struct TraceIdentityResult {
  bool identity = true;
  std::size_t trials_run = 0;
  std::uint64_t seed = 0;
  /// Set when identity is false: the first tuple where the traces differ.
  std::optional<TupleQ> counterexample;
  std::optional<std::uint64_t> counterexample_seed;
  Rational lhs_trace;
  Rational rhs_trace;
};

/// Randomized test of tr p(a) == tr q(a) over n x n integer tuples with
/// entries in [-5, 5]. A counterexample is a certificate; Identity is evidence.
TraceIdentityResult trace_identity_test(const NcPoly& p, const NcPoly& q, Eigen::Index n, std::size_t trials,
                                        std::uint64_t seed);

}  // namespace involut
