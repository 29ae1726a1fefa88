#pragma once

#include "core_params.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace halphen {

using Json = nlohmann::ordered_json;

/// Largest integer every IEEE-double JSON consumer represents exactly.
inline const BigInt kJsonSafeInteger = (BigInt(1) << 53) - 1;

/// Numbers inside the 53-bit safe range, decimal strings outside it.
inline Json to_json_integer(const BigInt &v)
{
	if (abs(v) <= kJsonSafeInteger)
		return Json(v.get_si());
	return Json(v.get_str());
}

inline Json to_json_integer(const std::optional<BigInt> &v)
{
	return v ? to_json_integer(*v) : Json(nullptr);
}

/// Inverse of to_json_integer; throws validation_error on anything else.
inline BigInt integer_from_json(const Json &j)
{
	if (j.is_number_integer())
		return BigInt(j.get<long>());
	if (j.is_string()) {
		BigInt out;
		if (out.set_str(j.get<std::string>(), 10) != 0)
			throw validation_error("not a decimal integer: " + j.get<std::string>());
		return out;
	}
	throw validation_error("expected an integer, got " + j.dump());
}

} // namespace halphen
