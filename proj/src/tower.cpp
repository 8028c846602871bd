#include "involut/tower.hpp"

#include <bit>
#include <sstream>

namespace involut {

namespace {

using Coeffs = std::vector<Rational>;

// Product in the sub-tower spanned by the first log2(a.size()) radicands.
Coeffs multiply(const TowerContext& ctx, std::span<const Rational> a, std::span<const Rational> b) {
  Coeffs out(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (a[s].is_zero()) continue;
    for (std::size_t t = 0; t < b.size(); ++t) {
      if (b[t].is_zero()) continue;
      out[s ^ t] += a[s] * b[t] * Rational(ctx.subset_product(s & t));
    }
  }
  return out;
}

Coeffs invert(const TowerContext& ctx, std::span<const Rational> a) {
  if (a.size() == 1) return {inverse(a[0])};
  const std::size_t half = a.size() / 2;
  const std::size_t level = std::countr_zero(half);
  const Rational top(ctx.radicands()[level]);
  const auto u = a.first(half);
  const auto v = a.subspan(half);
  // (u + v sqrt(d))^-1 = (u - v sqrt(d)) / (u^2 - d v^2)
  Coeffs norm = multiply(ctx, u, u);
  const Coeffs vv = multiply(ctx, v, v);
  for (std::size_t i = 0; i < half; ++i) norm[i] -= top * vv[i];
  bool norm_zero = true;
  for (const auto& c : norm) norm_zero = norm_zero && c.is_zero();
  if (norm_zero) throw std::logic_error("tower radicands are not independent");
  const Coeffs norm_inv = invert(ctx, norm);
  Coeffs out = multiply(ctx, u, norm_inv);
  const Coeffs high = multiply(ctx, v, norm_inv);
  out.reserve(a.size());
  for (const auto& c : high) out.push_back(-c);
  return out;
}

}  // namespace

TowerContext::TowerContext()
    : data_(std::make_shared<const Data>(Data{{}, {BigInt(1)}})) {}

TowerContext TowerContext::extended(const BigInt& radicand) const {
  Data next{data_->radicands, data_->subset_products};
  next.radicands.push_back(radicand);
  const std::size_t old = next.subset_products.size();
  for (std::size_t mask = 0; mask < old; ++mask) {
    next.subset_products.push_back(next.subset_products[mask] * radicand);
  }
  return TowerContext(std::make_shared<const Data>(std::move(next)));
}

bool TowerContext::is_prefix_of(const TowerContext& other) const {
  if (data_ == other.data_) return true;
  const auto& mine = radicands();
  const auto& theirs = other.radicands();
  if (mine.size() > theirs.size()) return false;
  for (std::size_t i = 0; i < mine.size(); ++i) {
    if (mine[i] != theirs[i]) return false;
  }
  return true;
}

TowerContext TowerContext::from_radicands(std::span<const BigInt> radicands, std::size_t max_depth) {
  if (radicands.size() > max_depth) throw std::length_error("tower depth exceeds cap");
  TowerContext ctx;
  for (const BigInt& d : radicands) {
    if (d == 0 || d == 1) throw std::invalid_argument("radicand must be nonzero and not 1");
    const auto dec = square_decompose(d);
    if (dec.square_root != 1) throw std::invalid_argument("radicand " + d.get_str() + " is not squarefree");
    for (std::size_t mask = 0; mask < ctx.dimension(); ++mask) {
      if (is_perfect_square(d * ctx.subset_product(mask))) {
        throw std::invalid_argument("radicand " + d.get_str() + " already lies in the tower");
      }
    }
    ctx = ctx.extended(d);
  }
  return ctx;
}

TowerContext common_context(const TowerContext& a, const TowerContext& b) {
  if (a.is_prefix_of(b)) return b;
  if (b.is_prefix_of(a)) return a;
  throw ContextMismatch("tower scalars from unrelated contexts");
}

TowerScalar::TowerScalar(TowerContext ctx, std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ctx_.dimension()) {
    throw std::invalid_argument("coefficient count does not match tower dimension");
  }
}

TowerScalar TowerScalar::basis(const TowerContext& ctx, std::size_t mask) {
  std::vector<Rational> coeffs(ctx.dimension());
  coeffs.at(mask) = Rational(1);
  return TowerScalar(ctx, std::move(coeffs));
}

bool TowerScalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool TowerScalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

Rational TowerScalar::to_rational() const {
  if (!is_rational()) throw std::domain_error("tower scalar is irrational");
  return coeffs_[0];
}

TowerScalar TowerScalar::lifted(const TowerContext& target) const {
  if (ctx_ == target) return *this;
  if (!ctx_.is_prefix_of(target)) throw ContextMismatch("cannot lift into an unrelated context");
  std::vector<Rational> coeffs = coeffs_;
  coeffs.resize(target.dimension());
  return TowerScalar(target, std::move(coeffs));
}

std::string TowerScalar::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t mask = 0; mask < coeffs_.size(); ++mask) {
    if (coeffs_[mask].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[mask];
    for (std::size_t i = 0; i < ctx_.depth(); ++i) {
      if ((mask >> i) & 1U) os << "*sqrt(" << ctx_.radicands()[i] << ")";
    }
  }
  if (first) os << "0";
  return os.str();
}

TowerScalar& TowerScalar::operator+=(const TowerScalar& o) {
  if (!(ctx_ == o.ctx_)) {
    const TowerContext ctx = common_context(ctx_, o.ctx_);
    *this = lifted(ctx);
    const TowerScalar rhs = o.lifted(ctx);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TowerScalar& TowerScalar::operator-=(const TowerScalar& o) { return *this += -o; }

TowerScalar operator-(const TowerScalar& a) {
  TowerScalar out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TowerScalar operator*(const TowerScalar& a, const TowerScalar& b) {
  if (a.ctx_ == b.ctx_) return TowerScalar(a.ctx_, multiply(a.ctx_, a.coeffs_, b.coeffs_));
  if (b.is_rational() && b.ctx_.is_prefix_of(a.ctx_)) {
    TowerScalar out = a;
    for (auto& c : out.coeffs_) c *= b.coeffs_[0];
    return out;
  }
  if (a.is_rational() && a.ctx_.is_prefix_of(b.ctx_)) return b * a;
  const TowerContext ctx = common_context(a.ctx_, b.ctx_);
  const TowerScalar x = a.lifted(ctx);
  const TowerScalar y = b.lifted(ctx);
  return TowerScalar(ctx, multiply(ctx, x.coeffs_, y.coeffs_));
}

TowerScalar& TowerScalar::operator*=(const TowerScalar& o) { return *this = *this * o; }

TowerScalar& TowerScalar::operator/=(const TowerScalar& o) { return *this = *this * inverse(o); }

TowerScalar inverse(const TowerScalar& x) {
  if (x.is_zero()) throw std::domain_error("division by zero");
  return TowerScalar(x.context(), invert(x.context(), x.coefficients()));
}

bool operator==(const TowerScalar& a, const TowerScalar& b) {
  if (a.ctx_ == b.ctx_) return a.coeffs_ == b.coeffs_;
  const TowerContext ctx = common_context(a.ctx_, b.ctx_);
  return a.lifted(ctx).coeffs_ == b.lifted(ctx).coeffs_;
}

std::pair<TowerContext, TowerScalar> adjoin_sqrt(const TowerContext& ctx, const Rational& r,
                                                 std::size_t max_depth) {
  if (r.is_zero()) throw std::domain_error("square root of zero is not adjoined");
  // sqrt(p/q) = sqrt(p q) / q
  const BigInt q = r.denominator();
  const auto dec = square_decompose(r.numerator() * q);
  const Rational scale = Rational(dec.square_root, q);
  const BigInt& d = dec.kernel;
  if (d == 1) return {ctx, TowerScalar(scale).lifted(ctx)};
  // sqrt(d) = t * sqrt(d_S) / d_S whenever d * d_S = t^2
  for (std::size_t mask = 1; mask < ctx.dimension(); ++mask) {
    const BigInt product = d * ctx.subset_product(mask);
    if (!is_perfect_square(product)) continue;
    BigInt t;
    mpz_sqrt(t.get_mpz_t(), product.get_mpz_t());
    const Rational coeff = scale * Rational(t, ctx.subset_product(mask));
    std::vector<Rational> coeffs(ctx.dimension());
    coeffs[mask] = coeff;
    return {ctx, TowerScalar(ctx, std::move(coeffs))};
  }
  if (ctx.depth() >= max_depth) throw std::length_error("tower depth exceeds cap");
  const TowerContext next = ctx.extended(d);
  std::vector<Rational> coeffs(next.dimension());
  coeffs[next.dimension() / 2] = scale;
  return {next, TowerScalar(next, std::move(coeffs))};
}

}  // namespace involut
