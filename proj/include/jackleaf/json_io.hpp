#pragma once

#include <json.hpp>

#include "jackleaf/multipoly.hpp"
#include "jackleaf/unipoly.hpp"

namespace jackleaf {

using Json = nlohmann::ordered_json;

// {"vars": ["r","y"], "terms": [{"exp": [1,0], "coef": "238"}, ...]}
// Terms emitted in graded-lex order of the exponent vectors; coefficients
// as decimal "p/q" strings with q omitted when 1.
Json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j);

// Univariate polynomials serialize as MultiPoly in the single variable r.
Json to_json(const UniPoly& p);

// {"num": <poly>, "den": <poly>}
Json to_json(const RatFun& f);
RatFun ratfun_from_json(const Json& j);

}  // namespace jackleaf
