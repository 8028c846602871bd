#pragma once

// JSON forms of the library's values (schema "involut/1").

#include <optional>
#include <utility>

#include <json.hpp>

#include "involut/classifier.hpp"
#include "involut/ncpoly.hpp"

namespace involut {

using json = nlohmann::json;

inline constexpr const char* kSchema = "involut/1";

json to_json(const Rational& r);
/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const json& j);

json to_json(const TowerScalar& x);
TowerScalar tower_from_json(const json& j);

json to_json(const MatrixQ& m);
json to_json(const MatrixT& m);
MatrixQ matrix_from_json(const json& j);

json to_json(const TupleQ& a, const std::optional<SignVector>& signs = std::nullopt);
/// {"n", "m", "components", "signs"?}; n and m are checked against the data.
std::pair<TupleQ, std::optional<SignVector>> tuple_from_json(const json& j);

json to_json(const NcPoly& p);
NcPoly poly_from_json(const json& j, std::size_t m);

json to_json(const StabilizerOutcome& s);
json to_json(const TauCanonicalForm& f);
json to_json(const ClassificationReport& r);

}  // namespace involut
