#include "involut/normal_form.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace involut {

namespace {

void swap_congruent(MatrixQ& s, MatrixQ& b, Eigen::Index i, Eigen::Index k) {
  if (i == k) return;
  s.row(i).swap(s.row(k));
  s.col(i).swap(s.col(k));
  b.row(i).swap(b.row(k));
}

// Lifts every entry into ctx, which must extend each entry's own context.
MatrixT lift(const MatrixT& m, const TowerContext& ctx) {
  MatrixT out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).lifted(ctx);
  return out;
}

}  // namespace

SymmetricNormalForm sym_congruence_to_identity(const MatrixQ& s) {
  if (!is_symmetric(s)) throw std::invalid_argument("matrix is not symmetric");
  if (is_zero(determinant(s))) throw std::invalid_argument("matrix is singular");
  const Eigen::Index n = s.rows();
  MatrixQ d = s;
  MatrixQ b = MatrixQ::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && d(pivot, pivot).is_zero()) ++pivot;
    if (pivot == n) {
      // All remaining diagonal entries vanish: add row and column j to i where
      // d(i, j) != 0, making d(i, i) = 2 d(i, j).
      Eigen::Index pi = -1;
      Eigen::Index pj = -1;
      for (Eigen::Index i = k; i < n && pi < 0; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
          if (!d(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) throw std::logic_error("invertible symmetric block with no nonzero entry");
      d.row(pi) += MatrixQ(d.row(pj));
      d.col(pi) += MatrixQ(d.col(pj));
      b.row(pi) += MatrixQ(b.row(pj));
      pivot = pi;
    }
    swap_congruent(d, b, pivot, k);
    const Rational p = d(k, k);
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (d(r, k).is_zero()) continue;
      const Rational f = d(r, k) / p;
      d.row(r) -= MatrixQ(d.row(k) * f);
      d.col(r) -= MatrixQ(d.col(k) * f);
      b.row(r) -= MatrixQ(b.row(k) * f);
    }
  }

  TowerContext ctx;
  std::vector<TowerScalar> scale;
  scale.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    // 1 / sqrt(p) = sqrt(p) / p
    auto [next, root] = adjoin_sqrt(ctx, d(k, k));
    ctx = next;
    scale.push_back(root * TowerScalar(inverse(d(k, k))));
  }
  MatrixT out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const TowerScalar f = scale[static_cast<std::size_t>(i)].lifted(ctx);
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = f * TowerScalar(b(i, j));
  }
  out = lift(out, ctx);
  const MatrixT residual = out * s.cast<TowerScalar>() * out.transpose();
  if (residual != MatrixT::Identity(n, n)) throw std::logic_error("symmetric congruence residual is nonzero");
  return {std::move(out), std::move(ctx)};
}

MatrixQ skew_congruence_to_J(const MatrixQ& w) {
  if (!is_skew_symmetric(w)) throw std::invalid_argument("matrix is not skew-symmetric");
  if (is_zero(determinant(w))) throw std::invalid_argument("matrix is singular");
  const Eigen::Index n = w.rows();
  const auto form = [&w](const VectorQ& x, const VectorQ& y) { return Rational((x.transpose() * w * y)(0, 0)); };

  std::vector<VectorQ> pool;
  for (Eigen::Index i = 0; i < n; ++i) pool.push_back(VectorQ::Unit(n, i));
  std::vector<VectorQ> firsts;
  std::vector<VectorQ> seconds;
  while (!pool.empty()) {
    std::optional<std::pair<std::size_t, std::size_t>> hyperbolic;
    for (std::size_t i = 0; i < pool.size() && !hyperbolic; ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        if (!form(pool[i], pool[j]).is_zero()) {
          hyperbolic.emplace(i, j);
          break;
        }
    if (!hyperbolic) throw std::logic_error("nondegenerate form left without a hyperbolic pair");
    const auto [xi, yi] = *hyperbolic;
    const Rational pairing = form(pool[xi], pool[yi]);
    const VectorQ x = pool[xi];
    const VectorQ y = pool[yi] / pairing;
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(yi));
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(xi));
    // Project the rest onto the orthogonal complement of span{x, y}.
    for (auto& z : pool) {
      const Rational zy = form(z, y);
      const Rational zx = form(z, x);
      z = z - x * zy + y * zx;
    }
    firsts.push_back(x);
    seconds.push_back(y);
  }
  const Eigen::Index half = n / 2;
  MatrixQ b(n, n);
  for (Eigen::Index i = 0; i < half; ++i) {
    b.row(i) = firsts[static_cast<std::size_t>(i)].transpose();
    b.row(half + i) = seconds[static_cast<std::size_t>(i)].transpose();
  }
  if (MatrixQ(b * w * b.transpose()) != standard_symplectic(n)) {
    throw std::logic_error("skew congruence residual is nonzero");
  }
  return b;
}

TauCanonicalForm canonicalize_tau_g(const ProjectiveQ& g) {
  const MatrixQ& rep = g.representative();
  switch (classify_projective_symmetry(g)) {
    case Symmetry::Symmetric: {
      SymmetricNormalForm nf = sym_congruence_to_identity(rep);
      return {ProjectiveT(MatrixT(nf.b.transpose())), CanonicalStabilizer::Tau, std::move(nf.context)};
    }
    case Symmetry::Skew: {
      const MatrixQ b = skew_congruence_to_J(rep);
      return {ProjectiveT(MatrixT(b.transpose().cast<TowerScalar>())), CanonicalStabilizer::TauG0, TowerContext()};
    }
    case Symmetry::NotSelfTransposed: break;
  }
  throw std::invalid_argument("g is not projectively self-transposed");
}

bool verify_canonical_form(const ProjectiveQ& g, const TauCanonicalForm& form) {
  const MatrixT& h = form.h.representative();
  const MatrixT image = h.transpose() * g.representative().cast<TowerScalar>() * h;
  switch (form.canonical) {
    case CanonicalStabilizer::Tau: return proportional(image, MatrixT::Identity(g.n(), g.n()));
    case CanonicalStabilizer::TauG0: return proportional(image, MatrixT(standard_symplectic(g.n()).cast<TowerScalar>()));
    case CanonicalStabilizer::Trivial: break;
  }
  return false;
}

}  // namespace involut
