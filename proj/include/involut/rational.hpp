#pragma once

// Exact rational numbers on top of GMP, usable as an Eigen scalar.

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

namespace involut {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& num) : q_(num) {}
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
  /// input or a zero denominator.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);
Rational inverse(const Rational& r);

/// Decomposes a nonzero integer as sign * square^2 * rest, where rest is free of
/// every prime below a trial-division bound and is not itself a perfect square.
/// For the magnitudes met in practice this is the squarefree part.
struct SquareDecomposition {
  BigInt square_root;  // the extracted square factor's root, > 0
  BigInt kernel;       // signed remaining factor
};
SquareDecomposition square_decompose(const BigInt& value);

bool is_perfect_square(const BigInt& value);

}  // namespace involut

template <>
struct std::hash<involut::Rational> {
  std::size_t operator()(const involut::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};

namespace Eigen {

template <>
struct NumTraits<involut::Rational> : GenericNumTraits<involut::Rational> {
  using Real = involut::Rational;
  using NonInteger = involut::Rational;
  using Nested = involut::Rational;
  using Literal = involut::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
