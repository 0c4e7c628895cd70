#include "lag2d/bipoly_io.hpp"

namespace lag2d {

nlohmann::json poly_to_json(const poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : p.terms())
    terms.push_back({{"a", k.first}, {"b", k.second}, {"c", c}});
  return {{"terms", terms}};
}

poly poly_from_json(const nlohmann::json& j) {
  poly p;
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("a").get<int>(), t.at("b").get<int>(), t.at("c").get<double>());
  return p;
}

}  // namespace lag2d
