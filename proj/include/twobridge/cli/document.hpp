#pragma once

#include <string>

#include <json.hpp>

#include "twobridge/bigint.hpp"
#include "twobridge/casson.hpp"
#include "twobridge/continued_fraction.hpp"
#include "twobridge/knot.hpp"
#include "twobridge/laurent.hpp"
#include "twobridge/obstruction.hpp"
#include "twobridge/rational.hpp"
#include "twobridge/slopes.hpp"

namespace twobridge::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Integers become JSON numbers when they fit in 64 bits and decimal strings
// otherwise. Rationals are always strings ("2", "-1/2").
Json integer_json(const BigInt& v);
Json rational_json(const Rational& v);

Json to_json(const SchubertForm& s);
Json to_json(const ContinuedFraction& cf);
Json to_json(const BoundarySlopeRecord& rec);
Json to_json(const SlopeSystem& sys);
Json to_json(const LaurentPolynomial& p);  // {"exponent": coefficient}
Json to_json(const LambdaValue& v);
Json to_json(const ObstructionReport& r);

/// {"schema_version": "1", "command": ..., "payload": ...}
Json make_document(const std::string& command, Json payload);

}  // namespace twobridge::cli
