#include "involut/serialize.hpp"

#include <string>

namespace involut {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational as \"p/q\" or an integer");
}

json to_json(const TowerScalar& x) {
  json radicands = json::array();
  for (const auto& d : x.context().radicands()) radicands.push_back(d.get_str());
  json coeffs = json::object();
  for (std::size_t mask = 0; mask < x.coefficients().size(); ++mask) {
    if (!x.coefficient(mask).is_zero()) coeffs[std::to_string(mask)] = x.coefficient(mask).str();
  }
  return {{"radicands", radicands}, {"coeffs", coeffs}};
}

TowerScalar tower_from_json(const json& j) {
  if (!j.is_object()) return TowerScalar(rational_from_json(j));
  std::vector<BigInt> radicands;
  for (const auto& d : j.at("radicands")) {
    radicands.emplace_back(d.is_string() ? d.get<std::string>() : std::to_string(d.get<long>()), 10);
  }
  const TowerContext ctx = TowerContext::from_radicands(radicands);
  std::vector<Rational> coeffs(ctx.dimension());
  for (const auto& [key, value] : j.at("coeffs").items()) {
    const unsigned long mask = std::stoul(key);
    if (mask >= coeffs.size()) throw std::invalid_argument("coefficient mask outside the tower");
    coeffs[mask] = rational_from_json(value);
  }
  return TowerScalar(ctx, std::move(coeffs));
}

namespace {

template <typename Scalar>
json matrix_json(const Matrix<Scalar>& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json to_json(const MatrixQ& m) { return matrix_json(m); }
json to_json(const MatrixT& m) { return matrix_json(m); }

MatrixQ matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  MatrixQ m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("matrix rows must have equal length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = rational_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json to_json(const TupleQ& a, const std::optional<SignVector>& signs) {
  json comps = json::array();
  for (const auto& c : a.components) comps.push_back(to_json(c));
  json out = {{"n", a.n}, {"m", a.m()}, {"components", comps}};
  if (signs) out["signs"] = signs->values();
  return out;
}

std::pair<TupleQ, std::optional<SignVector>> tuple_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("tuple must be a JSON object");
  std::vector<MatrixQ> comps;
  for (const auto& c : j.at("components")) comps.push_back(matrix_from_json(c));
  if (comps.empty()) throw std::invalid_argument("tuple needs at least one component");
  const Eigen::Index n = j.contains("n") ? j.at("n").get<Eigen::Index>() : comps.front().rows();
  if (j.contains("m") && j.at("m").get<std::size_t>() != comps.size()) {
    throw std::invalid_argument("m does not match the number of components");
  }
  TupleQ tuple(n, std::move(comps));
  std::optional<SignVector> signs;
  if (j.contains("signs")) {
    signs = SignVector(j.at("signs").get<std::vector<int>>());
    if (signs->size() != tuple.m()) throw std::invalid_argument("signs length does not match m");
  }
  return {std::move(tuple), std::move(signs)};
}

json to_json(const NcPoly& p) {
  json terms = json::array();
  for (const auto& [w, c] : p.terms()) {
    json word = json::array();
    for (int v : w) word.push_back(v + 1);
    terms.push_back({{"coeff", c.str()}, {"word", word}});
  }
  return {{"m", p.num_vars()}, {"text", p.str()}, {"terms", terms}};
}

NcPoly poly_from_json(const json& j, std::size_t m) {
  if (j.is_string()) return NcPoly::parse(j.get<std::string>(), m);
  NcPoly p(m);
  for (const auto& t : j.at("terms")) {
    Word w;
    for (const auto& v : t.at("word")) w.push_back(v.get<int>() - 1);
    p += NcPoly::monomial(m, std::move(w), rational_from_json(t.at("coeff")));
  }
  return p;
}

json to_json(const StabilizerOutcome& s) {
  json out = {{"outcome", to_string(s.kind)}, {"intertwiner_dimension", s.intertwiner_dimension}};
  if (s.element) {
    out["element"] = to_json(s.element->representative());
    out["symmetry"] = to_string(s.symmetry);
  }
  return out;
}

json to_json(const TauCanonicalForm& f) {
  json radicands = json::array();
  for (const auto& d : f.context.radicands()) radicands.push_back(d.get_str());
  return {{"canonical", to_string(f.canonical)}, {"h", to_json(f.h.representative())}, {"radicands", radicands}};
}

json to_json(const ClassificationReport& r) {
  json trials = json::array();
  for (std::size_t i = 0; i < r.trials.size(); ++i) {
    const TrialRecord& t = r.trials[i];
    json rec = {{"index", i},
                {"seed", t.seed},
                {"sample_seed", t.sample_seed},
                {"attempts", t.attempts},
                {"generated", t.generated}};
    if (t.generated) {
      rec["stabilizer"] = to_json(t.outcome);
      if (t.canonical_verified) {
        rec["canonical"] = to_string(t.canonical);
        rec["canonical_verified"] = *t.canonical_verified;
      }
    }
    trials.push_back(std::move(rec));
  }
  json spec = {{"n", r.spec.n},
               {"m", r.spec.m},
               {"family", to_string(r.spec.family)},
               {"signs", r.spec.effective_signs().values()}};
  json out = {{"schema", kSchema},
              {"verdict", to_string(r.verdict)},
              {"seed", r.seed},
              {"spec", spec},
              {"options", {{"trials", r.options.trials}, {"retry_cap", r.options.retry_cap}, {"bound", r.options.bound}}},
              {"trials", trials}};
  out["canonical_stabilizer"] = r.canonical_stabilizer ? json(to_string(*r.canonical_stabilizer)) : json(nullptr);
  return out;
}

}  // namespace involut
