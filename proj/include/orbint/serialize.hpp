#pragma once

// JSON forms of orbit data and results. Rationals are "num/den" strings,
// F-elements are {"a": ..., "b": ...} pairs meaning a + b sqrt(eps).

#include "orbint/orbit.hpp"
#include "orbint/orbital.hpp"

#include <json.hpp>

namespace orbint {

using json = nlohmann::json;

std::string rational_to_string(const Rational& x);
/// Accepts "n/d", "n" or a JSON integer.
Rational rational_from_json(const json& j);

json to_json_value(const QMat& m);
json to_json_value(const FMat& m);
QMat qmat_from_json(const json& j);
FMat fmat_from_json(const json& j, long epsilon);

json to_json_value(const GLOrbitDatum& x);
json to_json_value(const UOrbitDatum& y, long epsilon);
json to_json_value(const OrbitInvariants& inv);
json to_json_value(const OrbResult& r);
json to_json_value(const LaurentPoly& f);

/// {"n", "gamma": [[..]], "u1": [..], "u2": [..]}.
GLOrbitDatum gl_datum_from_json(const json& j);
/// {"n", "epsilon", "J": [[{a,b}..]], "alpha": [[..]], "u": [..]}; epsilon
/// falls back to `default_epsilon` when absent.
UOrbitDatum u_datum_from_json(const json& j, long default_epsilon);
OrbitInvariants invariants_from_json(const json& j);
OrbResult orb_result_from_json(const json& j);
LaurentPoly laurent_from_json(const json& j);

}  // namespace orbint
