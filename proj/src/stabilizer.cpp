#include "involut/stabilizer.hpp"

#include <deque>

namespace involut {

namespace {

VectorQ flatten(const MatrixQ& m) {
  const Eigen::Index n = m.rows();
  VectorQ v(n * n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) v(r * n + c) = m(r, c);
  return v;
}

MatrixQ unflatten(const VectorQ& v, Eigen::Index n) {
  MatrixQ m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = v(r * n + c);
  return m;
}

bool is_scalar_matrix(const MatrixQ& m) {
  const Rational& d = m(0, 0);
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (m(r, c) != (r == c ? d : Rational(0))) return false;
  return true;
}

}  // namespace

IntertwinerBasis intertwiner_basis(const TupleQ& a, const TupleQ& b) {
  if (a.n != b.n || a.m() != b.m()) throw std::invalid_argument("intertwiner of tuples with different shapes");
  const Eigen::Index n = a.n;
  const Eigen::Index unknowns = n * n;
  // Row (i, r, c) of the system is the (r, c) entry of g a_i - b_i g, with g
  // flattened row-major.
  MatrixQ system = MatrixQ::Zero(static_cast<Eigen::Index>(a.m()) * unknowns, unknowns);
  for (std::size_t i = 0; i < a.m(); ++i) {
    const MatrixQ& ai = a[i];
    const MatrixQ& bi = b[i];
    const Eigen::Index base = static_cast<Eigen::Index>(i) * unknowns;
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) {
        const Eigen::Index row = base + r * n + c;
        for (Eigen::Index k = 0; k < n; ++k) {
          system(row, r * n + k) += ai(k, c);
          system(row, k * n + c) -= bi(r, k);
        }
      }
  }
  IntertwinerBasis out;
  out.n = n;
  for (const VectorQ& v : kernel(integral_rows(system))) out.basis.push_back(unflatten(primitive(v), n));
  return out;
}

bool generates_full_algebra(const TupleQ& a) {
  const Eigen::Index n = a.n;
  SubspaceBasis span(n * n);
  std::deque<MatrixQ> frontier;
  const MatrixQ id = MatrixQ::Identity(n, n);
  span.insert(flatten(id));
  frontier.push_back(id);
  while (!frontier.empty() && span.dimension() < n * n) {
    const MatrixQ v = std::move(frontier.front());
    frontier.pop_front();
    for (const MatrixQ& ai : a.components) {
      MatrixQ w = ai * v;
      if (span.insert(flatten(w))) frontier.push_back(std::move(w));
    }
  }
  return span.dimension() == n * n;
}

bool centralizer_is_scalar(const TupleQ& a) { return intertwiner_basis(a, a).dimension() == 1; }

std::string_view to_string(StabilizerKind k) {
  switch (k) {
    case StabilizerKind::Unique: return "Unique";
    case StabilizerKind::NoneExists: return "NoneExists";
    case StabilizerKind::Ambiguous: return "Ambiguous";
  }
  return "?";
}

StabilizerOutcome stabilizer_element(const SignVector& signs, const TupleQ& a) {
  if (!generates_full_algebra(a)) throw std::invalid_argument("tuple does not generate M_n");
  const TupleQ target = tau_act(signs, a);
  const IntertwinerBasis basis = intertwiner_basis(a, target);
  StabilizerOutcome out;
  out.intertwiner_dimension = basis.dimension();
  if (basis.dimension() == 0) {
    out.kind = StabilizerKind::NoneExists;
    return out;
  }
  if (basis.dimension() > 1 || is_zero(determinant(basis.basis.front()))) {
    out.kind = StabilizerKind::Ambiguous;
    return out;
  }
  ProjectiveQ g(basis.basis.front());
  if (conjugate_tuple(g, a) != target) throw std::logic_error("intertwiner does not conjugate a to tau(a)");
  out.symmetry = classify_projective_symmetry(g);
  if (out.symmetry == Symmetry::NotSelfTransposed) {
    throw std::logic_error("unique stabilizer element is not projectively self-transposed");
  }
  out.kind = StabilizerKind::Unique;
  out.element = std::move(g);
  return out;
}

std::string_view to_string(CanonicalStabilizer c) {
  switch (c) {
    case CanonicalStabilizer::Trivial: return "{1}";
    case CanonicalStabilizer::Tau: return "{1,tau}";
    case CanonicalStabilizer::TauG0: return "{1,tau g0}";
  }
  return "?";
}

bool normalizer_membership(const ProjectiveQ& g, CanonicalStabilizer canonical) {
  const MatrixQ& rep = g.representative();
  switch (canonical) {
    case CanonicalStabilizer::Tau: return is_scalar_matrix(rep.transpose() * rep);
    case CanonicalStabilizer::TauG0: {
      if (g.n() % 2 != 0) throw std::invalid_argument("g0 requires even n");
      const MatrixQ j = standard_symplectic(g.n());
      return proportional(MatrixQ(rep.transpose() * j * rep), j);
    }
    case CanonicalStabilizer::Trivial: break;
  }
  throw std::invalid_argument("normalizer membership needs a nontrivial canonical stabilizer");
}

}  // namespace involut
