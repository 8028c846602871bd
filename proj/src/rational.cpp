#include "involut/rational.hpp"

#include <stdexcept>

namespace involut {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  std::string text(s.front() == '+' ? s.substr(1) : s);
  return BigInt(text, 10);
}

constexpr unsigned long kTrialDivisionBound = 100000;

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw std::invalid_argument("malformed denominator: '" + std::string(text) + "'");
  const BigInt den(std::string(den_text), 10);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational inverse(const Rational& r) { return Rational(1) / r; }

bool is_perfect_square(const BigInt& value) {
  return value >= 0 && mpz_perfect_square_p(value.get_mpz_t()) != 0;
}

SquareDecomposition square_decompose(const BigInt& value) {
  if (value == 0) throw std::domain_error("square decomposition of zero");
  BigInt rest = abs(value);
  BigInt root = 1;
  BigInt kernel = 1;
  for (unsigned long p = 2; p <= kTrialDivisionBound; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > rest) break;
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exponent;
    }
    for (unsigned e = 1; e < exponent; e += 2) root *= p;
    if (exponent % 2 == 1) kernel *= p;
  }
  // Whatever survives trial division is either prime, a prime square, or a
  // product of large primes left in the kernel as is.
  if (rest > 1 && is_perfect_square(rest)) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    root *= r;
  } else {
    kernel *= rest;
  }
  return {root, value < 0 ? BigInt(-kernel) : kernel};
}

}  // namespace involut
