#pragma once

// Exact arithmetic in Q(sqrt(d1), ..., sqrt(dk)).
//
// An element is stored as 2^k rational coefficients, one per subset S of the
// radicands, standing for sum_S c_S * prod_{i in S} sqrt(d_i). The radicands
// are kept multiplicatively independent modulo rational squares, so this
// basis is linearly independent and equality is coefficient-wise.

#include <cstddef>
#include <memory>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "involut/rational.hpp"

namespace involut {

/// Thrown when two tower scalars live in unrelated contexts.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultTowerDepth = 16;

class TowerContext {
 public:
  TowerContext();

  /// Builds a context from explicit radicands, validating that each one is a
  /// nonzero integer other than 1, squarefree up to the trial-division bound,
  /// and independent of the earlier ones modulo squares.
  static TowerContext from_radicands(std::span<const BigInt> radicands,
                                     std::size_t max_depth = kDefaultTowerDepth);

  std::size_t depth() const { return data_->radicands.size(); }
  std::size_t dimension() const { return std::size_t{1} << depth(); }
  const std::vector<BigInt>& radicands() const { return data_->radicands; }

  /// Product of the radicands selected by mask.
  const BigInt& subset_product(std::size_t mask) const { return data_->subset_products[mask]; }

  /// True when every radicand of *this is, in order, a leading radicand of other.
  bool is_prefix_of(const TowerContext& other) const;

  /// Appends a radicand without validation.
  TowerContext extended(const BigInt& radicand) const;

  friend bool operator==(const TowerContext& a, const TowerContext& b) {
    return a.data_ == b.data_ || a.data_->radicands == b.data_->radicands;
  }

 private:
  struct Data {
    std::vector<BigInt> radicands;
    std::vector<BigInt> subset_products;
  };
  explicit TowerContext(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

class TowerScalar {
 public:
  TowerScalar() : coeffs_(1) {}
  TowerScalar(long v) : coeffs_(1, Rational(v)) {}  // NOLINT(google-explicit-constructor)
  TowerScalar(int v) : coeffs_(1, Rational(v)) {}   // NOLINT(google-explicit-constructor)
  TowerScalar(const Rational& r) : coeffs_(1, r) {}  // NOLINT(google-explicit-constructor)
  TowerScalar(TowerContext ctx, std::vector<Rational> coeffs);

  /// The basis element prod_{i in mask} sqrt(d_i).
  static TowerScalar basis(const TowerContext& ctx, std::size_t mask);

  const TowerContext& context() const { return ctx_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coefficient(std::size_t mask) const { return coeffs_[mask]; }

  bool is_zero() const;
  /// True when only the rational coefficient is nonzero.
  bool is_rational() const;
  /// The rational value; throws std::domain_error unless is_rational().
  Rational to_rational() const;

  /// Re-expresses *this in a larger context that has ctx_ as a prefix.
  TowerScalar lifted(const TowerContext& target) const;

  std::string str() const;

  TowerScalar& operator+=(const TowerScalar& o);
  TowerScalar& operator-=(const TowerScalar& o);
  TowerScalar& operator*=(const TowerScalar& o);
  TowerScalar& operator/=(const TowerScalar& o);

  friend TowerScalar operator+(TowerScalar a, const TowerScalar& b) { return a += b; }
  friend TowerScalar operator-(TowerScalar a, const TowerScalar& b) { return a -= b; }
  friend TowerScalar operator*(const TowerScalar& a, const TowerScalar& b);
  friend TowerScalar operator/(TowerScalar a, const TowerScalar& b) { return a /= b; }
  friend TowerScalar operator-(const TowerScalar& a);

  friend bool operator==(const TowerScalar& a, const TowerScalar& b);

  friend std::ostream& operator<<(std::ostream& os, const TowerScalar& x) { return os << x.str(); }

 private:
  TowerContext ctx_;
  std::vector<Rational> coeffs_;
};

TowerScalar inverse(const TowerScalar& x);

/// The smallest context containing both; throws ContextMismatch when neither
/// context extends the other.
TowerContext common_context(const TowerContext& a, const TowerContext& b);

/// Returns a context containing sqrt(r) together with an element s of it
/// satisfying s * s == r. The context is returned unchanged when sqrt(r)
/// already lies in the tower. Throws std::domain_error for r == 0 and
/// std::length_error when the tower would exceed max_depth.
std::pair<TowerContext, TowerScalar> adjoin_sqrt(const TowerContext& ctx, const Rational& r,
                                                 std::size_t max_depth = kDefaultTowerDepth);

}  // namespace involut

namespace Eigen {

template <>
struct NumTraits<involut::TowerScalar> : GenericNumTraits<involut::TowerScalar> {
  using Real = involut::TowerScalar;
  using NonInteger = involut::TowerScalar;
  using Nested = involut::TowerScalar;
  using Literal = involut::TowerScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
