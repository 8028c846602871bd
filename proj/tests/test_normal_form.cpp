#include <doctest.h>

#include "involut/normal_form.hpp"

using namespace involut;

namespace {

MatrixQ diag(std::initializer_list<long> d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  MatrixQ m = MatrixQ::Zero(n, n);
  Eigen::Index i = 0;
  for (long v : d) {
    m(i, i) = Rational(v);
    ++i;
  }
  return m;
}

bool residual_is_identity(const SymmetricNormalForm& nf, const MatrixQ& s) {
  const MatrixT r = nf.b * s.cast<TowerScalar>() * nf.b.transpose();
  return r == MatrixT::Identity(s.rows(), s.rows());
}

}  // namespace

TEST_CASE("sym_congruence_to_identity examples") {
  auto nf = sym_congruence_to_identity(MatrixQ::Identity(3, 3));
  CHECK(nf.context.depth() == 0);
  CHECK(nf.b == MatrixT::Identity(3, 3));

  nf = sym_congruence_to_identity(diag({4, 9}));
  CHECK(nf.context.depth() == 0);
  MatrixT expected = MatrixT::Zero(2, 2);
  expected(0, 0) = TowerScalar(Rational(BigInt(1), BigInt(2)));
  expected(1, 1) = TowerScalar(Rational(BigInt(1), BigInt(3)));
  CHECK(nf.b == expected);

  MatrixQ hyperbolic(2, 2);
  hyperbolic << Rational(0), Rational(1), Rational(1), Rational(0);
  nf = sym_congruence_to_identity(hyperbolic);
  CHECK(residual_is_identity(nf, hyperbolic));
  CHECK(nf.context.depth() == 2);
  // sqrt(-1) lies in the tower
  CHECK(adjoin_sqrt(nf.context, Rational(-1)).first == nf.context);

  CHECK_THROWS_AS(sym_congruence_to_identity(diag({1, 0})), std::invalid_argument);
  MatrixQ asym = MatrixQ::Identity(2, 2);
  asym(0, 1) = Rational(1);
  CHECK_THROWS_AS(sym_congruence_to_identity(asym), std::invalid_argument);
}

TEST_CASE("skew_congruence_to_J examples") {
  CHECK(skew_congruence_to_J(standard_symplectic(4)) == MatrixQ::Identity(4, 4));
  MatrixQ w(2, 2);
  w << Rational(0), Rational(2), Rational(-2), Rational(0);
  const MatrixQ b = skew_congruence_to_J(w);
  CHECK(MatrixQ(b * w * b.transpose()) == standard_symplectic(2));
  CHECK_THROWS_AS(skew_congruence_to_J(MatrixQ::Identity(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(skew_congruence_to_J(MatrixQ::Zero(3, 3)), std::invalid_argument);
}

TEST_CASE("normal-form residuals on random inputs") {
  Rng rng(77);
  for (Eigen::Index n = 2; n <= 6; ++n) {
    int done = 0;
    while (done < 20) {
      MatrixQ s = random_symmetric(n, 5, rng);
      if (is_zero(determinant(s))) continue;
      // a zero diagonal now and then exercises the row+column fallback
      if (done % 4 == 0) {
        for (Eigen::Index i = 0; i < n; ++i) s(i, i) = Rational(0);
        if (is_zero(determinant(s))) continue;
      }
      const auto nf = sym_congruence_to_identity(s);
      CHECK(residual_is_identity(nf, s));
      CHECK(nf.context.depth() <= static_cast<std::size_t>(n));
      ++done;
    }
  }
  for (Eigen::Index n : {2, 4, 6}) {
    int done = 0;
    while (done < 20) {
      const MatrixQ w = random_skew(n, 5, rng);
      if (is_zero(determinant(w))) continue;
      const MatrixQ b = skew_congruence_to_J(w);
      CHECK(MatrixQ(b * w * b.transpose()) == standard_symplectic(n));
      ++done;
    }
  }
}

TEST_CASE("canonicalize_tau_g") {
  auto form = canonicalize_tau_g(ProjectiveQ::identity(3));
  CHECK(form.canonical == CanonicalStabilizer::Tau);
  CHECK(proj_eq(form.h, ProjectiveT::identity(3)));

  form = canonicalize_tau_g(g0(4));
  CHECK(form.canonical == CanonicalStabilizer::TauG0);
  CHECK(proj_eq(form.h, ProjectiveT::identity(4)));

  const ProjectiveQ g(diag({2, 1}));
  form = canonicalize_tau_g(g);
  CHECK(form.canonical == CanonicalStabilizer::Tau);
  CHECK(verify_canonical_form(g, form));
  CHECK(form.context.radicands() == std::vector<BigInt>{BigInt(2)});

  MatrixQ upper = MatrixQ::Identity(2, 2);
  upper(0, 1) = Rational(1);
  CHECK_THROWS_AS(canonicalize_tau_g(ProjectiveQ(upper)), std::invalid_argument);
}

TEST_CASE("symmetry class is stable along canonicalization") {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const Eigen::Index n = 4;
    const MatrixQ g = t % 2 == 0 ? random_symmetric(n, 4, rng) : random_skew(n, 4, rng);
    if (is_zero(determinant(g))) continue;
    const ProjectiveQ pg(g);
    const auto form = canonicalize_tau_g(pg);
    CHECK(verify_canonical_form(pg, form));
    const MatrixT image = form.h.representative().transpose() * g.cast<TowerScalar>() * form.h.representative();
    CHECK(classify_projective_symmetry(ProjectiveT(image)) == classify_projective_symmetry(pg));
  }
}
