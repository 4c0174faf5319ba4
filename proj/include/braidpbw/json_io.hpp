#pragma once

#include "braidpbw/scalar.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace braidpbw {

using Json = nlohmann::json;

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

// Parses JSON text; syntax errors become ParseError with line/column.
Json parse_json_text(std::string_view text);

// Reads a whole file; a missing file is a ParseError at line 0.
std::string read_text_file(const std::string& path);

/// Position of a value token (string, number or literal) in the source.
/// Skips to the `occurrence`-th object key equal to `key` (0-based), then
/// returns the `offset`-th value token after it. Falls back to the start of
/// the text if the token is not found.
SourcePos locate_value(std::string_view text, std::string_view key, std::size_t occurrence,
                       std::size_t offset);

/// Scalar from a JSON string literal or integer. Literal errors are reported
/// at `at` shifted by the column inside the literal.
Scalar scalar_from_json(const Json& v, FieldSpec field, SourcePos at);

std::string scalar_to_json_literal(const Scalar& s);

} // namespace braidpbw
