#pragma once

#include <string>
#include <vector>

#include "sascone/cone_classifier.hpp"
#include "sascone/serialize.hpp"

namespace sascone::emit {

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& text);

// Shortest form is not used: doubles always carry 17 significant digits and
// the '.' separator, independent of the global locale.
std::string format_double(double value);

// Deterministic JSON: keys sorted, two-space indent, trailing newline.
std::string to_json_text(const Json& record);

// "key: value" lines in key order; nested objects use dotted keys.
std::string to_text(const Json& record);

// Header line then one line per row.
std::string to_csv(const std::vector<std::string>& columns,
                   const std::vector<std::vector<double>>& rows);

std::string emit(const Json& record, Format format);

// "1/2 < v1/v2 < 2", "5 < v1/v2", "p+_w = t+_w (entire w-cone)",
// "empty (all rays indefinite)".
std::string range_text(const cone::PositivityRange& range);

}  // namespace sascone::emit
