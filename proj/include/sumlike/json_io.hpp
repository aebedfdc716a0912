/**
 * @file json_io.hpp
 * @brief JSON documents for families, samples and scalar moduli.
 *
 * Readers reject unknown fields. Writers emit doubles with 17 significant
 * digits so that every value round-trips exactly.
 */

#pragma once

#include "sumlike/core.hpp"

#include <json.hpp>

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sumlike {

using Json = nlohmann::ordered_json;

Json to_json(const ModulusSample& s);
Json to_json(const ScalarModulus& f);
Json to_json(const ModulusSpec& spec);
Json to_json(const FamilyDescription& fam);
Json to_json(const ToleranceConfig& tol);

ModulusSample sample_from_json(const Json& j);
ScalarModulus scalar_modulus_from_json(const Json& j);
ModulusSpec modulus_spec_from_json(const Json& j);
FamilyDescription family_from_json(const Json& j);

// Field access for hand-written readers; all throw Error(InvalidInput)
// with `what` in the message.
void check_fields(const Json& j, std::initializer_list<std::string_view> allowed, std::string_view what);
const Json& require(const Json& j, const char* key, std::string_view what);
double as_number(const Json& j, std::string_view what);
std::string as_string(const Json& j, std::string_view what);
std::vector<double> as_numbers(const Json& j, std::string_view what);
/// Numbers are accepted and formatted as point labels.
std::vector<std::string> as_strings(const Json& j, std::string_view what);

/// Parse text; syntax errors become Error(InvalidInput).
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// Serialize with "%.17g" doubles; non-finite doubles are written as the
/// strings "INFINITE" / "-INFINITE" / "NaN".
std::string dump_json(const Json& j, int indent = 2);

/// Double that may be infinite, as JSON (number or "INFINITE").
Json number_or_infinite(double x);

}  // namespace sumlike
