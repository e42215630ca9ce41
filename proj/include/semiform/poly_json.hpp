#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include <semiform/polynomial.hpp>

namespace semiform
{

// Wire format:
//   { "n": int, "terms": [ { "exponents": [int, ...], "coeff": "num/den" }, ... ] }
// Terms are emitted in canonical order. Reading accepts any term order,
// merges duplicate monomials and drops zero coefficients.
nlohmann::json to_json(const Polynomial &p);
Polynomial polynomial_from_json(const nlohmann::json &j);

std::string dump_polynomial(const Polynomial &p);
Polynomial load_polynomial(std::string_view text);

} // namespace semiform
