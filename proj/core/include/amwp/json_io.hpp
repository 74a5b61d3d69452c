#ifndef AMWP_JSON_IO_HPP
#define AMWP_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "amwp/cubic_form.hpp"
#include "amwp/prepotential.hpp"
#include "amwp/toric.hpp"

namespace amwp {

using Json = nlohmann::json;

/// Cubic schema:
/// { "r": int, "mode": "monomials" | "intersection",
///   "terms": [ { "exponents": [e1..er] | "indices": [i,j,k], "value": "p/q" } ] }
/// Indices are 1-based in the file format.
CubicForm cubic_from_json(const Json& j);
Json cubic_to_json(const CubicForm& f);

/// Prepotential schema: { "cubic": {...}, "quadratic": [[[re,im] x r] x r],
/// "linear": [[re,im] x r], "constant": [re,im],
/// "tail": [ { "m": [m1..mr], "c": [re,im] } ] }.
/// Every field except "cubic" may be omitted.
Prepotential prepotential_from_json(const Json& j);
Json prepotential_to_json(const Prepotential& p);

/// Polytope schema: { "vertices": [[int x 4] x 5] }.
LatticeSimplex polytope_from_json(const Json& j);
Json polytope_to_json(const LatticeSimplex& p);

Json load_json_file(const std::string& path);

}  // namespace amwp

#endif  // AMWP_JSON_IO_HPP
