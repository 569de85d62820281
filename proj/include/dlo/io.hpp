#pragma once

// JSON forms. Rationals are strings "p/q", -inf is "-inf"; coefficients are
// numbers when they fit in 64 bits and decimal strings otherwise.

#include "dlo/atoms.hpp"
#include "dlo/characteristic.hpp"
#include "dlo/genring.hpp"

#include "json.hpp"

namespace dlo {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);

Json params_to_json(const ParamSet& p);
ParamSet params_from_json(const Json& j);

/// {"params": [...], "colors": [{"gaps": [...], "coeff": c}, ...]}, colors
/// listed leading first.
Json characteristic_to_json(const Characteristic& c);
Characteristic characteristic_from_json(const Json& j);

/// {"formula": ..., "gaps": [...], "height": h, "sample": [...]}.
Json atom_to_json(const Atom& a, std::span<const std::string> names);

/// {"text": ..., "terms": [{"coeff": c, "factors": [{"base", "index", "exp"}]}]}.
Json genpoly_to_json(const GenPoly& p);

/// `{(1,0,0):1, (0,1,0):-2} over {1,0}`, colors leading first.
std::string to_string(const Characteristic& c);

}  // namespace dlo
