#include <doctest.h>

#include "involut/random.hpp"
#include "involut/tower.hpp"

using namespace involut;

namespace {

Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }

TowerContext sqrt2_ctx() { return adjoin_sqrt(TowerContext(), q(2)).first; }

TowerScalar random_tower(const TowerContext& ctx, Rng& rng) {
  std::vector<Rational> c(ctx.dimension());
  for (auto& x : c) x = q(uniform_int(rng, -6, 6), uniform_int(rng, 1, 4));
  return TowerScalar(ctx, std::move(c));
}

}  // namespace

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK(Rational::parse("4/2").str() == "2");
  CHECK(Rational::parse("0/5").is_zero());
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
}

TEST_CASE("square decomposition") {
  auto d = square_decompose(BigInt(72));
  CHECK(d.square_root == 6);
  CHECK(d.kernel == 2);
  d = square_decompose(BigInt(-12));
  CHECK(d.square_root == 2);
  CHECK(d.kernel == -3);
  d = square_decompose(BigInt(1));
  CHECK(d.kernel == 1);
  // large prime square survives trial division
  const BigInt p("1000000007");
  d = square_decompose(p * p * 5);
  CHECK(d.square_root == p);
  CHECK(d.kernel == 5);
}

TEST_CASE("tower arithmetic examples") {
  const auto [ctx, s2] = adjoin_sqrt(TowerContext(), q(2));
  CHECK(s2 * s2 == TowerScalar(2));
  const TowerScalar one_plus = TowerScalar(1) + s2;
  const TowerScalar one_minus = TowerScalar(1) - s2;
  CHECK(one_plus * one_minus == TowerScalar(-1));
  const TowerScalar inv = TowerScalar(1) / one_plus;
  CHECK(inv == TowerScalar(-1) + s2);
  CHECK(inv * one_plus == TowerScalar(1));
  CHECK_THROWS_AS(s2 / TowerScalar(0), std::domain_error);
}

TEST_CASE("adjoin_sqrt examples") {
  SUBCASE("perfect square leaves context unchanged") {
    const auto [ctx, s] = adjoin_sqrt(TowerContext(), q(4));
    CHECK(ctx.depth() == 0);
    CHECK(s == TowerScalar(2));
  }
  SUBCASE("sqrt 8 inside Q(sqrt 2)") {
    const TowerContext c2 = sqrt2_ctx();
    const auto [ctx, s] = adjoin_sqrt(c2, q(8));
    CHECK(ctx == c2);
    CHECK(s == TowerScalar(2) * TowerScalar::basis(c2, 1));
    CHECK(s * s == TowerScalar(8));
  }
  SUBCASE("sqrt -1") {
    const auto [ctx, s] = adjoin_sqrt(TowerContext(), q(-1));
    REQUIRE(ctx.depth() == 1);
    CHECK(ctx.radicands()[0] == -1);
    CHECK(s * s == TowerScalar(-1));
  }
  SUBCASE("fractions reduce to squarefree radicands") {
    const auto [ctx, s] = adjoin_sqrt(TowerContext(), q(3, 8));
    CHECK(ctx.radicands()[0] == 6);
    CHECK(s * s == TowerScalar(q(3, 8)));
  }
  SUBCASE("product of existing radicands is found") {
    auto [c1, a] = adjoin_sqrt(TowerContext(), q(2));
    auto [c2, b] = adjoin_sqrt(c1, q(-3));
    auto [c3, s] = adjoin_sqrt(c2, q(-6, 25));
    CHECK(c3 == c2);
    CHECK(s * s == TowerScalar(q(-6, 25)));
  }
  CHECK_THROWS_AS(adjoin_sqrt(TowerContext(), q(0)), std::domain_error);
}

TEST_CASE("tower depth cap") {
  TowerContext ctx;
  const long primes[] = {2, 3, 5};
  for (long p : primes) ctx = adjoin_sqrt(ctx, q(p), 3).first;
  CHECK(ctx.depth() == 3);
  CHECK_THROWS_AS(adjoin_sqrt(ctx, q(7), 3), std::length_error);
}

TEST_CASE("context mismatch") {
  const auto a = adjoin_sqrt(TowerContext(), q(2)).second;
  const auto b = adjoin_sqrt(TowerContext(), q(3)).second;
  CHECK_THROWS_AS(a + b, ContextMismatch);
  CHECK_THROWS_AS(a * b, ContextMismatch);
}

TEST_CASE("from_radicands validation") {
  const BigInt ok[] = {BigInt(2), BigInt(-1)};
  CHECK(TowerContext::from_radicands(ok).depth() == 2);
  const BigInt dependent[] = {BigInt(2), BigInt(3), BigInt(6)};
  CHECK_THROWS_AS(TowerContext::from_radicands(dependent), std::invalid_argument);
  const BigInt not_squarefree[] = {BigInt(12)};
  CHECK_THROWS_AS(TowerContext::from_radicands(not_squarefree), std::invalid_argument);
}

TEST_CASE("field axioms on random triples") {
  TowerContext ctx;
  for (long d : {2L, -1L, 5L}) ctx = adjoin_sqrt(ctx, q(d)).first;
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const TowerScalar x = random_tower(ctx, rng);
    const TowerScalar y = random_tower(ctx, rng);
    const TowerScalar z = random_tower(ctx, rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * inverse(x) == TowerScalar(1));
    const TowerScalar x2 = x + TowerScalar(0);
    CHECK(x2 * z == x * z);
  }
}

TEST_CASE("adjoined roots square back") {
  Rng rng(5);
  TowerContext ctx;
  for (int trial = 0; trial < 100; ++trial) {
    long p = uniform_int(rng, -30, 30);
    if (p == 0) p = 7;
    const Rational r = q(p, uniform_int(rng, 1, 9));
    auto [next, s] = adjoin_sqrt(ctx, r);
    CHECK(s * s == TowerScalar(r));
    if (next.depth() < 6) ctx = next;
  }
}
