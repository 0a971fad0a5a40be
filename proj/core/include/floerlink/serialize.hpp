#pragma once

#include <json.hpp>

#include "floerlink/catalog.hpp"
#include "floerlink/detect.hpp"
#include "floerlink/invariants.hpp"
#include "floerlink/lattice.hpp"
#include "floerlink/laurent.hpp"

namespace floerlink {

// Canonical JSON forms (keys and orderings are stable across runs):
//   polynomial terms: [[doubled-exponent-vector, coefficient], ...] in
//     lexicographic exponent order;
//   HModel: {"n": k, "tables": {"mask": [[lattice-point, value], ...]}}.

nlohmann::json poly_terms_to_json(const LaurentPoly& p);
LaurentPoly poly_terms_from_json(const nlohmann::json& j, int n);

nlohmann::json poly_to_json(const LaurentPoly& p);

nlohmann::json table_to_json(const HPrimeTable& t);
HPrimeTable table_from_json(const nlohmann::json& j, int arity);

nlohmann::json model_to_json(const HModel& m);
HModel model_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json rational_to_json(const Rational& r);
nlohmann::json dbound_to_json(const DInvariantBound& b);

}  // namespace floerlink
