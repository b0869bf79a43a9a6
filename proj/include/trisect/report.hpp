#pragma once

// Structured reports for the command-line tool.  Reports are JSON objects with
// sorted keys so that reruns are byte-identical; the text rendering walks the
// same object.

#include <string>
#include <string_view>

#include "json.hpp"
#include "trisect/diagram.hpp"
#include "trisect/invariants.hpp"
#include "trisect/standardize.hpp"

namespace trisect {

using Json = nlohmann::json;

/// Entries that fit a signed 64-bit integer become numbers, others strings.
Json to_json(const Integer& v);
/// Row-major array of rows.
Json to_json(const IntMatrix& m);
Json to_json(const HomologyResult& h);
Json to_json(const ValidationReport& r);
Json to_json(const FormInvariants& f);
Json to_json(const LinkingMatrix& lm);
Json to_json(const TransformationRecord& r);
Json to_json(const StandardizationResult& r);
Json to_json(const ComparisonReport& r);

/// Reads a matrix written by to_json(IntMatrix); throws ParseError.
IntMatrix matrix_from_json(const Json& j, std::string_view field);

/// Named forms: "empty", "e8", "hyperbolic", "diag:1,1,-1", "identity:N", or
/// a JSON matrix literal such as "[[2,1],[1,2]]".  Throws ParseError.
IntMatrix parse_form_spec(std::string_view spec);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

std::string render_json(const Json& report);
/// Indented key/value listing; integer matrices are printed one row per line
/// with right-aligned columns.
std::string render_text(const Json& report);

}  // namespace trisect
