#pragma once

#include "darksector/exact_angle.hpp"
#include "json.hpp"

namespace darksector {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are written as numbers, larger ones as
/// decimal strings.
Json bigint_to_json(const BigInt& v);
/// Accepts an integer number or a decimal string; throws std::invalid_argument.
BigInt bigint_from_json(const Json& j);

Json to_json(const RationalTurn& t);
Json to_json(const GroupElement& g);

}  // namespace darksector
