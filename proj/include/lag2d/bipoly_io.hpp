#pragma once

#include <json.hpp>

#include "lag2d/bipoly.hpp"

namespace lag2d {

// Schema: {"terms": [{"a": int, "b": int, "c": real}, ...]} with the term
// list sorted lexicographically by (a, b).  Zero coefficients are dropped on
// write and pruned on read, so round-trips are stable.
nlohmann::json poly_to_json(const poly& p);
poly poly_from_json(const nlohmann::json& j);

}  // namespace lag2d
