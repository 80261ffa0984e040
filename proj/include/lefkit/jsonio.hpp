#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "lefkit/graded.hpp"
#include "lefkit/matrix.hpp"

namespace lefkit {

// All wire values are exact: rationals travel as strings "p/q" in lowest
// terms (the "/q" is omitted for integers), vectors as arrays of such
// strings, matrices as row-major arrays of rows.
using Json = nlohmann::ordered_json;

std::string rat_to_string(const Rat& x);
// Accepts "p" or "p/q" with any common factor; canonicalizes. Throws
// std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

Json vec_to_json(const QVec& v);
QVec vec_from_json(const Json& j);

Json mat_to_json(const QMat& m);
// Requires an array of equally sized rows; [] is the 0 x 0 matrix.
QMat mat_from_json(const Json& j);

// Graded ring descriptions, dispatched on "type":
//   {"type": "exterior", "n": 4}
//   {"type": "surface", "b": <matrix>}
//   {"type": "tensor", "left": <ring>, "right": <ring>}
//   {"type": "table", "degrees": [..], "unit": i, "triples": [[i,j,k,"c"],..]}
// Absent triples mean zero products. The algebra laws are verified on
// construction; violations throw std::invalid_argument.
GradedAlgebra ring_from_json(const Json& j);

// Sorted [degree, dimension] pairs.
Json graded_dims_to_json(const std::map<int, int>& dims);

}  // namespace lefkit
