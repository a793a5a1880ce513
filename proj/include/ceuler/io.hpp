#pragma once

// JSON and text renderings of the library types.
//
// Integers become JSON numbers when they fit in a signed 64-bit value and
// decimal strings otherwise; readers accept both. Rationals are [num, den]
// pairs, polynomials {"coeffs": [[num, den], ...]} with ascending exponents.

#include <string>

#include "json.hpp"

#include "ceuler/exact.hpp"
#include "ceuler/structures.hpp"

namespace ceuler {

using Json = nlohmann::ordered_json;

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"blocks": [[1,2],[3]], "colors": [1,0]}
Json partition_to_json(const ColoredOrderedSetPartition& tau);
ColoredOrderedSetPartition partition_from_json(const Json& j, int alpha);

/// {"word": [2,1,3], "colors": [1,1,0]}
Json colored_permutation_to_json(const ColoredPermutation& tau);
ColoredPermutation colored_permutation_from_json(const Json& j, int alpha);

/// Fixed-point rendering with `precision` fractional digits, rounded half
/// away from zero.
std::string to_decimal(const Rational& r, int precision);

}  // namespace ceuler
