#include <doctest.h>

#include "involut/classifier.hpp"

using namespace involut;

namespace {

FamilySpec spec(Eigen::Index n, std::size_t m, Family f = Family::Full) {
  FamilySpec s;
  s.n = n;
  s.m = m;
  s.family = f;
  return s;
}

}  // namespace

TEST_CASE("classify_involution examples") {
  CHECK(classify_involution(spec(2, 2), 1).verdict == Verdict::FirstKindOrthogonal);
  CHECK(classify_involution(spec(2, 3), 1).verdict == Verdict::SecondKindUnitary);
  CHECK(classify_involution(spec(3, 2), 1).verdict == Verdict::SecondKindUnitary);

  const auto symp = classify_involution(spec(4, 4, Family::SymplecticComponents), 1);
  CHECK(symp.verdict == Verdict::FirstKindSymplectic);
  REQUIRE(symp.canonical_stabilizer.has_value());
  CHECK(*symp.canonical_stabilizer == CanonicalStabilizer::TauG0);
  for (const auto& t : symp.trials) {
    CHECK(t.outcome.symmetry == Symmetry::Skew);
    CHECK(t.canonical_verified == std::optional<bool>(true));
  }

  const auto symp2 = classify_involution(spec(2, 3, Family::SymplecticComponents), 1);
  CHECK(symp2.verdict == Verdict::NotGenerating);
  for (const auto& t : symp2.trials) CHECK(t.attempts == 8);
}

TEST_CASE("symplectic family needs enough components to generate") {
  // Each J w satisfies a polynomial of degree n/2, so for n = 4 the components
  // generate an algebra of dimension at most 2^m.
  const TupleQ one = sample_tuple(4, 1, Family::SymplecticComponents, 10, 3);
  const MatrixQ& x = one[0];
  const MatrixQ x2 = x * x;
  const Rational c1 = x2(0, 1) / x(0, 1);
  const MatrixQ rest = x2 - x * c1;
  CHECK(rest == MatrixQ(MatrixQ::Identity(4, 4) * rest(0, 0)));

  CHECK(classify_involution(spec(4, 2, Family::SymplecticComponents), 1).verdict == Verdict::NotGenerating);
  CHECK(classify_involution(spec(4, 3, Family::SymplecticComponents), 1).verdict == Verdict::NotGenerating);
  CHECK(classify_involution(spec(6, 3, Family::SymplecticComponents), 1).verdict == Verdict::FirstKindSymplectic);
}

TEST_CASE("report structure") {
  ClassifierOptions opts;
  opts.trials = 3;
  const auto r = classify_involution(spec(3, 2, Family::SymmetricComponents), 9, opts);
  CHECK(r.trials.size() == 3);
  CHECK(r.verdict == Verdict::FirstKindOrthogonal);
  CHECK(*r.canonical_stabilizer == CanonicalStabilizer::Tau);
  for (const auto& t : r.trials) {
    CHECK(t.generated);
    CHECK(t.outcome.kind == StabilizerKind::Unique);
    CHECK(t.canonical_verified == std::optional<bool>(true));
    CHECK(tau_act(SignVector::all_plus(2), t.tuple) == conjugate_tuple(*t.outcome.element, t.tuple));
  }
  // schedule independence: same seed, same trials
  const auto again = classify_involution(spec(3, 2, Family::SymmetricComponents), 9, opts);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(again.trials[i].sample_seed == r.trials[i].sample_seed);
    CHECK(proj_eq(*again.trials[i].outcome.element, *r.trials[i].outcome.element));
  }
}

TEST_CASE("mixed-sign full families") {
  FamilySpec s = spec(2, 2);
  s.signs = SignVector({1, -1});
  CHECK(classify_involution(s, 4).verdict == Verdict::SecondKindUnitary);
}

TEST_CASE("verdict is seed independent") {
  for (std::uint64_t seed : {2ULL, 3ULL, 1000ULL}) {
    CHECK(classify_involution(spec(2, 2), seed).verdict == Verdict::FirstKindOrthogonal);
    CHECK(classify_involution(spec(2, 4), seed).verdict == Verdict::SecondKindUnitary);
  }
}

TEST_CASE("invalid family specs") {
  CHECK_THROWS_AS(classify_involution(spec(2, 1), 1), std::invalid_argument);
  CHECK_THROWS_AS(classify_involution(spec(3, 2, Family::SymplecticComponents), 1), std::invalid_argument);
  FamilySpec s = spec(2, 2, Family::SymmetricComponents);
  s.signs = SignVector({1, -1});
  CHECK_THROWS_AS(classify_involution(s, 1), std::invalid_argument);
  s = spec(2, 2);
  s.signs = SignVector({1, -1, 1});
  CHECK_THROWS_AS(classify_involution(s, 1), std::invalid_argument);
}

TEST_CASE("orbit_dichotomy_check") {
  CHECK(orbit_dichotomy_check(spec(3, 2, Family::SymmetricComponents), 1));
  CHECK(orbit_dichotomy_check(spec(2, 2), 1));
  CHECK(orbit_dichotomy_check(spec(4, 4, Family::SymplecticComponents), 1));
  CHECK_THROWS_AS(orbit_dichotomy_check(spec(3, 2), 1), std::domain_error);
}

TEST_CASE("ud22_section6_walkthrough") {
  const auto r = ud22_section6_walkthrough(Rational(1), Rational(2), Rational(0), Rational(1), Rational(2), Rational(0));
  MatrixQ expected = MatrixQ::Zero(2, 2);
  expected(0, 0) = Rational(2);
  expected(1, 1) = Rational(1);
  CHECK(proj_eq(r.g, ProjectiveQ(expected)));
  CHECK(r.conjugates_to_transpose);
  CHECK(r.symmetric);

  const auto id = ud22_section6_walkthrough(Rational(1), Rational(-1), Rational(5), Rational(1), Rational(1), Rational(5));
  CHECK(proj_eq(id.g, ProjectiveQ::identity(2)));
  CHECK(id.conjugates_to_transpose);

  CHECK_THROWS_AS(ud22_section6_walkthrough(Rational(1), Rational(1), Rational(0), Rational(1), Rational(2), Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(ud22_section6_walkthrough(Rational(1), Rational(2), Rational(0), Rational(0), Rational(2), Rational(0)),
                  std::invalid_argument);
}
