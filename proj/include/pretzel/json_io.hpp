#pragma once

#include <json.hpp>

#include "pretzel/polygon.hpp"
#include "pretzel/rational_fn.hpp"

namespace pretzel {

/// Term schema: {"l": int, "m": int, "num": "decimal-string",
/// "den": "decimal-string"}; a polynomial is the list of its terms in the
/// canonical (l, m)-ascending order.
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

/// {"num": [terms], "den": [terms]}; the "den" key is omitted when it is 1.
nlohmann::json rational_fn_to_json(const RationalFn& r);
RationalFn rational_fn_from_json(const nlohmann::json& j);

/// {"coords": "(L,M)", "vertices": [[l, m], ...]} in canonical order.
nlohmann::json polygon_to_json(const LatticePolygon& poly);

}  // namespace pretzel
