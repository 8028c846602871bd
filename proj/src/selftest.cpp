#include "involut/selftest.hpp"

#include <functional>

#include "involut/ncpoly.hpp"
#include "involut/normal_form.hpp"

namespace involut {

namespace {

NcPoly random_poly(std::size_t m, Rng& rng) {
  NcPoly p(m);
  const long terms = uniform_int(rng, 1, 4);
  for (long t = 0; t < terms; ++t) {
    Word w(static_cast<std::size_t>(uniform_int(rng, 0, 4)));
    for (auto& v : w) v = static_cast<int>(uniform_int(rng, 0, static_cast<long>(m) - 1));
    p += NcPoly::monomial(m, std::move(w), Rational(uniform_int(rng, -5, 5)));
  }
  return p;
}

SignVector random_signs(std::size_t m, Rng& rng) {
  std::vector<int> s(m);
  for (auto& x : s) x = uniform_int(rng, 0, 1) != 0 ? 1 : -1;
  return SignVector(std::move(s));
}

MatrixQ random_invertible(Eigen::Index n, Rng& rng, MatrixQ (*draw)(Eigen::Index, long, Rng&)) {
  for (;;) {
    MatrixQ g = draw(n, 5, rng);
    if (!is_zero(determinant(g))) return g;
  }
}

// Runs `check` on `cases` fresh generators; a false return or an exception
// counts as a failure.
PropertyResult run(const std::string& name, std::uint64_t seed, std::size_t cases,
                   const std::function<bool(Rng&)>& check) {
  PropertyResult out{name};
  for (std::size_t i = 0; i < cases; ++i) {
    Rng rng(derive_seed(seed, i));
    bool ok = false;
    std::string why = "case " + std::to_string(i);
    try {
      ok = check(rng);
    } catch (const std::exception& e) {
      why += ": " + std::string(e.what());
    }
    ++out.cases;
    if (!ok) {
      if (out.failures == 0) out.first_failure = why;
      ++out.failures;
    }
  }
  return out;
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::uint64_t seed, std::size_t cases) {
  std::vector<PropertyResult> results;
  std::uint64_t stream = 0;
  const auto next = [&] { return derive_seed(seed, stream++); };

  results.push_back(run("rho_anti_automorphism", next(), cases, [](Rng& rng) {
    const NcPoly p = random_poly(3, rng);
    const NcPoly q = random_poly(3, rng);
    return rho(p * q) == rho(q) * rho(p) && rho(rho(p)) == p && rho(p + q) == rho(p) + rho(q);
  }));

  results.push_back(run("rho_evaluation_identity", next(), cases, [](Rng& rng) {
    const std::size_t m = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const Eigen::Index n = uniform_int(rng, 1, 4);
    const NcPoly p = random_poly(m, rng);
    const TupleQ a = sample_tuple(n, m, Family::Full, 5, rng());
    return eval(rho(p), a) == MatrixQ(eval(p, transpose_tuple(a)).transpose()) &&
           trace_eval(rho(p), transpose_tuple(a)) == trace_eval(p, a);
  }));

  results.push_back(run("sigma_tilde_evaluation_identity", next(), cases, [](Rng& rng) {
    const std::size_t m = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const Eigen::Index n = uniform_int(rng, 1, 4);
    const NcPoly p = random_poly(m, rng);
    const SignVector eps = random_signs(m, rng);
    const TupleQ a = sample_tuple(n, m, Family::Full, 5, rng());
    return eval(sigma_tilde(eps, p), a) == MatrixQ(eval(p, tau_act(eps, a)).transpose()) &&
           sigma_tilde(eps, sigma_tilde(eps, p)) == p;
  }));

  results.push_back(run("mixed_equivariance", next(), cases, [](Rng& rng) {
    const Eigen::Index n = uniform_int(rng, 2, 4);
    const std::size_t m = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const ProjectiveQ h = random_projective(n, 5, rng);
    const SignVector eps = random_signs(m, rng);
    const TupleQ a = sample_tuple(n, m, Family::Full, 10, rng());
    return tau_act(eps, conjugate_tuple(h, a)) == conjugate_tuple(proj_transpose(h).inverse(), tau_act(eps, a));
  }));

  results.push_back(run("congruence_preserves_symmetry_class", next(), cases, [](Rng& rng) {
    const bool skew = uniform_int(rng, 0, 1) != 0;
    const Eigen::Index n = skew ? 2 * uniform_int(rng, 1, 3) : uniform_int(rng, 1, 5);
    const MatrixQ g = random_invertible(n, rng, skew ? random_skew : random_symmetric);
    const MatrixQ h = random_projective(n, 5, rng).representative();
    const Symmetry cls = classify_projective_symmetry(ProjectiveQ(g));
    return cls == (skew ? Symmetry::Skew : Symmetry::Symmetric) &&
           classify_projective_symmetry(ProjectiveQ(MatrixQ(h * g * h.transpose()))) == cls &&
           classify_projective_symmetry(ProjectiveQ(MatrixQ(h * inverse(g) * h.transpose()))) == cls;
  }));

  results.push_back(run("symmetric_normal_form_residual", next(), cases, [](Rng& rng) {
    const Eigen::Index n = uniform_int(rng, 2, 6);
    const MatrixQ s = random_invertible(n, rng, random_symmetric);
    const SymmetricNormalForm nf = sym_congruence_to_identity(s);
    const MatrixT residual = nf.b * s.cast<TowerScalar>() * nf.b.transpose() - MatrixT::Identity(n, n);
    return is_zero_matrix(residual) && nf.context.depth() <= static_cast<std::size_t>(n);
  }));

  results.push_back(run("skew_normal_form_residual", next(), cases, [](Rng& rng) {
    const Eigen::Index n = 2 * uniform_int(rng, 1, 3);
    const MatrixQ w = random_invertible(n, rng, random_skew);
    const MatrixQ b = skew_congruence_to_J(w);
    return is_zero_matrix(MatrixQ(b * w * b.transpose() - standard_symplectic(n)));
  }));

  results.push_back(run("tau_squared_is_identity", next(), cases, [](Rng& rng) {
    const Eigen::Index n = uniform_int(rng, 1, 4);
    const std::size_t m = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const SignVector eps = random_signs(m, rng);
    const TupleQ a = sample_tuple(n, m, Family::Full, 10, rng());
    const ProjectiveQ g = random_projective(n, 5, rng);
    return tau_act(eps, tau_act(eps, a)) == a && proj_eq(proj_transpose(proj_transpose(g)), g);
  }));

  results.push_back(run("tower_field_axioms", next(), cases, [](Rng& rng) {
    TowerContext ctx;
    for (int k = 0; k < 3; ++k) {
      long d = uniform_int(rng, -20, 20);
      if (d == 0) d = 3;
      ctx = adjoin_sqrt(ctx, Rational(d)).first;
    }
    const auto draw = [&] {
      std::vector<Rational> c(ctx.dimension());
      for (auto& x : c) x = Rational(BigInt(uniform_int(rng, -5, 5)), BigInt(uniform_int(rng, 1, 4)));
      return TowerScalar(ctx, std::move(c));
    };
    const TowerScalar x = draw();
    const TowerScalar y = draw();
    const TowerScalar z = draw();
    bool ok = (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z && x + y == y + x;
    if (!x.is_zero()) ok = ok && x * inverse(x) == TowerScalar(1);
    return ok;
  }));

  return results;
}

}  // namespace involut
