#include "involut/matrix.hpp"

#include <string>

namespace involut {

SignVector::SignVector(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
  }
}

SignVector SignVector::parse(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (tok == "+" || tok == "+1" || tok == "1") {
      out.push_back(1);
    } else if (tok == "-" || tok == "-1") {
      out.push_back(-1);
    } else {
      throw std::invalid_argument("malformed sign '" + std::string(tok) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return SignVector(std::move(out));
}

bool SignVector::all_positive() const {
  for (int s : signs_) {
    if (s < 0) return false;
  }
  return true;
}

std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Symmetric: return "Symmetric";
    case Symmetry::Skew: return "Skew";
    case Symmetry::NotSelfTransposed: return "NotSelfTransposed";
  }
  return "?";
}

MatrixQ standard_symplectic(Eigen::Index n) {
  if (n % 2 != 0) throw std::invalid_argument("J requires even n");
  const Eigen::Index h = n / 2;
  MatrixQ j = MatrixQ::Zero(n, n);
  for (Eigen::Index i = 0; i < h; ++i) {
    j(i, h + i) = Rational(1);
    j(h + i, i) = Rational(-1);
  }
  return j;
}

ProjectiveQ g0(Eigen::Index n) { return ProjectiveQ(standard_symplectic(n)); }

MatrixQ elementary(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  MatrixQ e = MatrixQ::Zero(n, n);
  e(i - 1, j - 1) = Rational(1);
  return e;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Full: return "full";
    case Family::SymmetricComponents: return "sym";
    case Family::SymplecticComponents: return "symp";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "full") return Family::Full;
  if (text == "sym") return Family::SymmetricComponents;
  if (text == "symp") return Family::SymplecticComponents;
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

MatrixQ random_matrix(Eigen::Index n, long bound, Rng& rng) {
  MatrixQ a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Rational(uniform_int(rng, -bound, bound));
  return a;
}

MatrixQ random_symmetric(Eigen::Index n, long bound, Rng& rng) {
  MatrixQ a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      a(i, j) = Rational(uniform_int(rng, -bound, bound));
      a(j, i) = a(i, j);
    }
  return a;
}

MatrixQ random_skew(Eigen::Index n, long bound, Rng& rng) {
  MatrixQ a = MatrixQ::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      a(i, j) = Rational(uniform_int(rng, -bound, bound));
      a(j, i) = -a(i, j);
    }
  return a;
}

ProjectiveQ random_projective(Eigen::Index n, long bound, Rng& rng) {
  for (;;) {
    MatrixQ h = random_matrix(n, bound, rng);
    if (!is_zero(determinant(h))) return ProjectiveQ(std::move(h));
  }
}

TupleQ sample_tuple(Eigen::Index n, std::size_t m, Family family, long bound, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (bound < 1) throw std::invalid_argument("sampling bound must be at least 1");
  if (family == Family::SymplecticComponents && n % 2 != 0) {
    throw std::invalid_argument("symplectic family requires even n");
  }
  Rng rng(seed);
  std::vector<MatrixQ> comps;
  comps.reserve(m);
  const MatrixQ j = family == Family::SymplecticComponents ? standard_symplectic(n) : MatrixQ();
  for (std::size_t i = 0; i < m; ++i) {
    switch (family) {
      case Family::Full: comps.push_back(random_matrix(n, bound, rng)); break;
      case Family::SymmetricComponents: comps.push_back(random_symmetric(n, bound, rng)); break;
      case Family::SymplecticComponents: comps.emplace_back(j * random_skew(n, bound, rng)); break;
    }
  }
  return TupleQ(n, std::move(comps));
}

}  // namespace involut
