#pragma once

#include <json.hpp>

#include "harmonia/cyclotomic.hpp"
#include "harmonia/modes.hpp"
#include "harmonia/poly.hpp"
#include "harmonia/su2.hpp"
#include "harmonia/verify.hpp"

namespace harmonia {

using Json = nlohmann::json;

// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input. Malformed
// documents raise std::invalid_argument.

Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);

/// {"conductor": N, "coeffs": [[num, den], ...]} over the power basis.
Json to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const Json& j);

/// [{"exp": [a,b,c,d], "coeff": ...}, ...] in descending monomial order.
Json to_json(const HPoly& f);
HPoly hpoly_from_json(const Json& j);

Json to_json(const ModeBasis& mb);
ModeBasis mode_basis_from_json(const Json& j);

Json to_json(const BinaryGroup& g);

Json to_json(const VerificationReport& r);

/// Space tag as written in documents: "S3", "L5", "D3", "T", "O", "I".
Space space_from_tag(const std::string& tag);

}  // namespace harmonia
