#pragma once

// JSON views of the report types. Every numeric field is emitted as a
// string: exact decimal for integers, scientific notation with 15
// significant digits for reals, so big integers survive any JSON parser and
// identical inputs produce byte-identical documents.

#include <string>

#include <json.hpp>

#include "asorder/bounds.hpp"
#include "asorder/census.hpp"
#include "asorder/verify.hpp"

namespace asorder {

using Json = nlohmann::ordered_json;

std::string format_real(long double v);

Json to_json(const SubfieldCensus& c);
Json to_json(const BoundReport& r);
Json to_json(const OrderResult& o);
Json to_json(const VerificationRecord& r);

}  // namespace asorder
