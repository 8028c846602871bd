#include <doctest.h>

#include "involut/matrix.hpp"

using namespace involut;

namespace {

MatrixQ mat(std::initializer_list<std::initializer_list<long>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  MatrixQ m(n, static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

MatrixQ diag(std::initializer_list<long> d) {
  MatrixQ m = MatrixQ::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (long v : d) { m(i, i) = Rational(v); ++i; }
  return m;
}

}  // namespace

TEST_CASE("exact determinant, inverse and kernel") {
  const MatrixQ a = mat({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(determinant(a) == Rational(18));
  CHECK(a * inverse(a) == MatrixQ::Identity(3, 3));
  CHECK(determinant(mat({{0, 1}, {1, 0}})) == Rational(-1));
  const MatrixQ s = mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(s) == 2);
  const auto k = kernel(s);
  REQUIRE(k.size() == 1);
  CHECK(is_zero_matrix(s * k[0]));
  CHECK(primitive(k[0]) == (VectorQ(3) << Rational(1), Rational(1), Rational(-1)).finished());
  CHECK_THROWS_AS(inverse(s), std::domain_error);
}

TEST_CASE("proj_eq") {
  const auto id = ProjectiveQ::identity(2);
  CHECK(proj_eq(id, ProjectiveQ(MatrixQ(diag({5, 5})))));
  CHECK_FALSE(proj_eq(id, ProjectiveQ(diag({1, 2}))));
  const MatrixQ j = standard_symplectic(2);
  CHECK(proj_eq(ProjectiveQ(j), ProjectiveQ(MatrixQ(-j))));
}

TEST_CASE("proj_transpose") {
  CHECK(proj_eq(proj_transpose(ProjectiveQ::identity(3)), ProjectiveQ::identity(3)));
  const auto upper = ProjectiveQ(mat({{1, 1}, {0, 1}}));
  CHECK(proj_transpose(upper).representative() == mat({{1, 0}, {1, 1}}));
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto g = random_projective(3, 10, rng);
    CHECK(proj_eq(proj_transpose(proj_transpose(g)), g));
  }
}

TEST_CASE("classify_projective_symmetry") {
  CHECK(classify_projective_symmetry(ProjectiveQ::identity(2)) == Symmetry::Symmetric);
  CHECK(classify_projective_symmetry(ProjectiveQ(mat({{0, 1}, {-1, 0}}))) == Symmetry::Skew);
  CHECK(classify_projective_symmetry(ProjectiveQ(mat({{1, 1}, {0, 1}}))) == Symmetry::NotSelfTransposed);
  CHECK(classify_projective_symmetry(ProjectiveQ(MatrixQ(Rational(-3) * standard_symplectic(4)))) == Symmetry::Skew);
}

TEST_CASE("conjugate_tuple") {
  const TupleQ a(2, {mat({{0, 1}, {2, 0}})});
  CHECK(conjugate_tuple(ProjectiveQ::identity(2), a) == a);
  CHECK(conjugate_tuple(ProjectiveQ(diag({2, 1})), a)[0] == mat({{0, 2}, {1, 0}}));
  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    const auto g = random_projective(3, 5, rng);
    const auto h = random_projective(3, 5, rng);
    const TupleQ x = sample_tuple(3, 2, Family::Full, 10, 100 + t);
    CHECK(conjugate_tuple(g * h, x) == conjugate_tuple(g, conjugate_tuple(h, x)));
  }
}

TEST_CASE("tau_act") {
  const MatrixQ a = mat({{1, 2}, {3, 4}});
  const MatrixQ b = mat({{0, 5}, {6, 7}});
  const TupleQ x(2, {a, b});
  const TupleQ plus = tau_act(SignVector({1, 1}), x);
  CHECK(plus[0] == MatrixQ(a.transpose()));
  CHECK(plus[1] == MatrixQ(b.transpose()));
  const TupleQ mixed = tau_act(SignVector({1, -1}), x);
  CHECK(mixed[1] == MatrixQ(-b.transpose()));
  CHECK(tau_act(SignVector({1, -1}), mixed) == x);
  CHECK_THROWS_AS(tau_act(SignVector({1}), x), std::invalid_argument);
}

TEST_CASE("sign vector parsing") {
  CHECK(SignVector::parse("+,-,+").values() == std::vector<int>{1, -1, 1});
  CHECK(SignVector::parse("1,-1").values() == std::vector<int>{1, -1});
  CHECK_THROWS_AS(SignVector::parse("+,x"), std::invalid_argument);
}

TEST_CASE("mixed equivariance of tau and conjugation") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const auto h = random_projective(3, 6, rng);
    const SignVector eps({uniform_int(rng, 0, 1) ? 1 : -1, uniform_int(rng, 0, 1) ? 1 : -1});
    const TupleQ a = sample_tuple(3, 2, Family::Full, 10, 500 + t);
    CHECK(tau_act(eps, conjugate_tuple(h, a)) == conjugate_tuple(proj_transpose(h).inverse(), tau_act(eps, a)));
  }
}

TEST_CASE("sample_tuple families") {
  CHECK(sample_tuple(3, 2, Family::Full, 10, 42) == sample_tuple(3, 2, Family::Full, 10, 42));
  CHECK_FALSE(sample_tuple(3, 2, Family::Full, 10, 42) == sample_tuple(3, 2, Family::Full, 10, 43));
  const TupleQ s = sample_tuple(4, 3, Family::SymmetricComponents, 10, 1);
  for (const auto& c : s.components) CHECK(is_symmetric(c));
  const TupleQ w = sample_tuple(4, 3, Family::SymplecticComponents, 10, 2);
  const MatrixQ j = standard_symplectic(4);
  const MatrixQ j_inv = inverse(j);
  for (const auto& c : w.components) CHECK(j * c * j_inv == MatrixQ(c.transpose()));
  CHECK_THROWS_AS(sample_tuple(3, 2, Family::SymplecticComponents, 10, 1), std::invalid_argument);
  const TupleQ bounded = sample_tuple(3, 2, Family::Full, 2, 9);
  for (const auto& c : bounded.components)
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j2 = 0; j2 < 3; ++j2) CHECK(abs(c(i, j2)) <= Rational(2));
}

TEST_CASE("odd skew matrices are singular") {
  Rng rng(31);
  for (Eigen::Index n : {3, 5}) {
    for (int t = 0; t < 100; ++t) {
      const MatrixQ w = random_skew(n, 10, rng);
      CHECK(is_zero(determinant(w)));
      CHECK_THROWS_AS(ProjectiveQ{w}, std::invalid_argument);
    }
  }
}

TEST_CASE("congruence preserves the symmetry class") {
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index n = 4;
    const auto h = random_projective(n, 5, rng).representative();
    MatrixQ g = t % 2 == 0 ? random_symmetric(n, 6, rng) : random_skew(n, 6, rng);
    if (is_zero(determinant(g))) continue;
    const ProjectiveQ pg(g);
    const Symmetry cls = classify_projective_symmetry(pg);
    CHECK(classify_projective_symmetry(ProjectiveQ(MatrixQ(h * g * h.transpose()))) == cls);
    CHECK(classify_projective_symmetry(ProjectiveQ(MatrixQ(h * inverse(g) * h.transpose()))) == cls);
  }
}

TEST_CASE("tower matrices") {
  const auto s2 = adjoin_sqrt(TowerContext(), Rational(2)).second;
  MatrixT m = MatrixT::Identity(2, 2);
  m(0, 0) = s2;
  CHECK(determinant(m) == s2);
  const MatrixT prod = m * inverse(m);
  CHECK(prod == MatrixT::Identity(2, 2));
}
